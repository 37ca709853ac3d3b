"""Explicit two-color exchangeable laws that are not exchangeable.

Two families over the alphabet (-1, 0, 1):

* :func:`pair_counterexample`, a law on pairs with no mass on the diagonal
  and masses 1/9 and 2/9 on the two cyclic orientations;
* :func:`general_counterexample`, a law for every n >= 3 supported on the
  outcomes with exactly two distinct symbols, one of them occurring once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .dist import Alphabet, JointDistribution, Outcome, make_distribution

TERNARY = Alphabet((-1, 0, 1))


class Which(enum.Enum):
    FIRST = "f"
    SECOND = "s"


@dataclass(frozen=True)
class OmegaIndex:
    """Names one support point of the n >= 3 family.

    ``alpha`` is the symbol occurring exactly once, ``i`` its 1-based position.
    Two outcomes share (alpha, i); FIRST is the lexicographically smaller.
    """

    alpha: int
    i: int
    which: Which

    def decode(self, n: int) -> Outcome:
        _require_n(n)
        if self.alpha not in TERNARY or not 1 <= self.i <= n:
            raise ValueError(f"invalid index {self}")
        candidates = [
            tuple(self.alpha if j == self.i - 1 else beta for j in range(n))
            for beta in TERNARY
            if beta != self.alpha
        ]
        candidates = TERNARY.sorted(candidates)
        return candidates[0] if self.which is Which.FIRST else candidates[1]


def _require_n(n: int) -> None:
    if n < 3:
        raise ValueError("n must be at least 3")


def pair_counterexample() -> JointDistribution:
    ninth = Fraction(1, 9)
    return make_distribution(
        TERNARY,
        2,
        [
            ((-1, 0), ninth),
            ((0, 1), ninth),
            ((1, -1), ninth),
            ((0, -1), 2 * ninth),
            ((1, 0), 2 * ninth),
            ((-1, 1), 2 * ninth),
        ],
    )


def omega_indices(n: int) -> list[OmegaIndex]:
    _require_n(n)
    return [OmegaIndex(a, i, w) for a in TERNARY for i in range(1, n + 1) for w in Which]


def omega_family(n: int) -> list[Outcome]:
    """The 6n outcomes in (alpha, i, FIRST/SECOND) order.

    For n = 3 this excludes all-distinct outcomes such as (-1, 0, 1): every
    member has exactly two distinct symbols.
    """
    return [ix.decode(n) for ix in omega_indices(n)]


def general_mass(ix: OmegaIndex, n: int) -> Fraction:
    """Mass assigned to an index by :func:`general_counterexample`."""
    norm = 3 * n * (n + 1)
    decreasing = (ix.alpha, ix.which) in {
        (-1, Which.FIRST),
        (1, Which.FIRST),
        (0, Which.SECOND),
    }
    return Fraction(n - ix.i + 1 if decreasing else ix.i, norm)


def general_counterexample(n: int) -> JointDistribution:
    _require_n(n)
    return make_distribution(
        TERNARY, n, [(ix.decode(n), general_mass(ix, n)) for ix in omega_indices(n)]
    )


def construct(name: str) -> JointDistribution:
    """Look up a construction by its CLI name: ``pair`` or ``general:<n>``."""
    if name == "pair":
        return pair_counterexample()
    if name.startswith("general:"):
        try:
            n = int(name[len("general:") :])
        except ValueError:
            raise ValueError(f"invalid n in {name!r}") from None
        return general_counterexample(n)
    raise ValueError(f"unknown construction {name!r}")
