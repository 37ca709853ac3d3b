"""Exact rational arithmetic and Gaussian elimination over Q."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rational(n: int, d: int = 1) -> Fraction:
    """Return the canonical fraction n/d (positive denominator, lowest terms)."""
    if d == 0:
        raise ValueError("zero denominator")
    return Fraction(n, d)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``. Anything else (decimals, exponents) is rejected."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    return rational(int(num), int(den) if den is not None else 1)


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    """Dense immutable matrix of fractions.

    ``cols`` is stored explicitly so that matrices with zero rows still know
    their width.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    cols: int

    def __post_init__(self) -> None:
        for r in self.rows:
            if len(r) != self.cols:
                raise ValueError(f"ragged row: expected {self.cols} entries, got {len(r)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cols required for a matrix with no rows")
            cols = len(rows[0])
        return cls(rows, cols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(tuple((Fraction(0),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)),
            size,
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return RationalMatrix(self.rows + other.rows, self.cols)

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(row, v) if a), Fraction(0)) for row in self.rows)

    def annihilates(self, v: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.apply(v))


def rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns the nonzero rows and the pivot columns."""
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == len(a):
            break
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        # constraint rows are sparse; touch only the pivot row's support
        nz = [(j, x) for j, x in enumerate(a[r]) if x]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                row = a[i]
                for j, x in nz:
                    row[j] -= f * x
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {v : m v = 0}, one vector per free column.

    Each vector is scaled so its first nonzero entry is 1, which makes the
    output deterministic.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[free]
        lead = next(x for x in v if x != 0)
        basis.append(tuple(x / lead for x in v))
    return basis
