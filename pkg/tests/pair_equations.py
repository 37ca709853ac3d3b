"""Hand-written linear systems for ternary pairs, used as oracles."""

from twocolor.linalg import RationalMatrix

# coordinates (-1,-1) (-1,0) (-1,1) (0,-1) (0,0) (0,1) (1,-1) (1,0) (1,1)
# rows: x2 + x~6 = x~2 + x6,  x2 + x~4 = x~2 + x4,  x4 + x~6 = x~4 + x6
PAIR_TWO_COLOR_EQUATIONS = RationalMatrix.from_rows(
    [
        [0, 1, 1, -1, 0, 0, -1, 0, 0],
        [0, 1, 0, -1, 0, -1, 0, 1, 0],
        [0, 0, 1, 0, 0, 1, -1, -1, 0],
    ]
)

# same coordinates; rows x_j - x~_j for j = 2, 4, 6
PAIR_EXCHANGEABILITY_EQUATIONS = RationalMatrix.from_rows(
    [
        [0, 1, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, -1, 0],
        [0, 0, -1, 0, 0, 0, 1, 0, 0],
    ]
)
