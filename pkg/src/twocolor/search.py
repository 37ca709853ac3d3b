"""Linear equality systems for the two symmetry notions, and gap witnesses.

A distribution on a fixed support is a vector p of masses indexed by the
support. Exchangeability and two-color exchangeability are both cut out by
homogeneous linear equations in p. When the two-color solution space is
strictly larger, a point inside it but outside the exchangeable one is a law
that is two-color exchangeable without being exchangeable.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .check import is_exchangeable, is_two_color_exchangeable, orbit_key
from .dist import (
    Alphabet,
    DistributionError,
    JointDistribution,
    Outcome,
    make_distribution,
    nontrivial_colorings,
    orbit_size,
)
from .linalg import RationalMatrix, nullspace_basis, rank

DEFAULT_SUPPORT_GUARD = 3**10


class WitnessConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class SupportSpec:
    alphabet: Alphabet
    n: int
    support: tuple[Outcome, ...]

    def __post_init__(self) -> None:
        support = tuple(tuple(o) for o in self.support)
        object.__setattr__(self, "support", support)
        if len(set(support)) != len(support):
            raise DistributionError("support has duplicate outcomes")
        orbits = Counter()
        for o in support:
            if len(o) != self.n or any(s not in self.alphabet for s in o):
                raise DistributionError(f"invalid support outcome {o}")
            orbits[orbit_key(o, self.alphabet)] += 1
        for key, count in orbits.items():
            if count != orbit_size(Counter(key).values()):
                raise DistributionError("support not permutation-closed")

    def index(self) -> dict[Outcome, int]:
        return {o: j for j, o in enumerate(self.support)}

    def to_distribution(self, p: Sequence[Fraction]) -> JointDistribution:
        return make_distribution(self.alphabet, self.n, zip(self.support, p))


@dataclass(frozen=True)
class ConstraintSystem:
    """Rows are homogeneous equations: row . p = 0."""

    spec: SupportSpec
    matrix: RationalMatrix

    def rank(self) -> int:
        return rank(self.matrix)

    def is_satisfied_by(self, p: Sequence[Fraction]) -> bool:
        return self.matrix.annihilates(p)


def full_support(alphabet: Alphabet, n: int, guard: int = DEFAULT_SUPPORT_GUARD) -> SupportSpec:
    if len(alphabet) ** n > guard:
        raise DistributionError("support too large")
    return SupportSpec(alphabet, n, tuple(itertools.product(alphabet.symbols, repeat=n)))


def omega_support(alphabet: Alphabet, n: int) -> SupportSpec:
    """Outcomes with exactly two distinct symbols, one of which occurs once.

    Over (-1, 0, 1) this is the support of the general construction, sorted
    lexicographically.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    out = []
    for alpha, beta in itertools.permutations(alphabet.symbols, 2):
        for i in range(n):
            out.append(tuple(alpha if j == i else beta for j in range(n)))
    return SupportSpec(alphabet, n, tuple(alphabet.sorted(out)))


def _chain_rows(
    classes: dict[Outcome, list[Outcome]],
    sort_key,
    vector_of,
    ncols: int,
) -> list[list[Fraction]]:
    rows = []
    for key in sorted(classes, key=sort_key):
        members = sorted(classes[key], key=sort_key)
        for a, b in zip(members, members[1:]):
            row = [Fraction(0)] * ncols
            for j, x in vector_of(a).items():
                row[j] += x
            for j, x in vector_of(b).items():
                row[j] -= x
            rows.append(row)
    return rows


def exchangeability_constraints(spec: SupportSpec) -> ConstraintSystem:
    """p_a - p_b = 0 for lexicographically adjacent members of each orbit."""
    idx = spec.index()
    orbits: dict[Outcome, list[Outcome]] = defaultdict(list)
    for o in spec.support:
        orbits[orbit_key(o, spec.alphabet)].append(o)
    rows = _chain_rows(
        orbits, spec.alphabet.sort_key, lambda o: {idx[o]: Fraction(1)}, len(spec.support)
    )
    return ConstraintSystem(spec, RationalMatrix.from_rows(rows, len(spec.support)))


def two_color_constraints(spec: SupportSpec) -> ConstraintSystem:
    """Equal pushforward mass across each binary weight class, per coloring.

    Each pushforward mass is the sum of the p-coordinates that map onto the
    binary outcome. Only binary outcomes reachable from the support appear;
    with a permutation-closed support those fill whole weight classes.
    """
    ncols = len(spec.support)
    rows: list[list[Fraction]] = []
    for c in nontrivial_colorings(spec.alphabet):
        preimage: dict[Outcome, dict[int, Fraction]] = defaultdict(dict)
        for j, o in enumerate(spec.support):
            preimage[tuple(c(s) for s in o)][j] = Fraction(1)
        weights: dict[int, list[Outcome]] = defaultdict(list)
        for b in preimage:
            weights[sum(b)].append(b)
        rows += _chain_rows(weights, lambda x: x, preimage.__getitem__, ncols)
    return ConstraintSystem(spec, RationalMatrix.from_rows(rows, ncols))


def gap_dimensions(spec: SupportSpec) -> tuple[int, int]:
    """(dim of two-color solutions, dim of exchangeable solutions)."""
    tc = two_color_constraints(spec).matrix
    ex = exchangeability_constraints(spec).matrix
    ncols = len(spec.support)
    return ncols - rank(tc), ncols - rank(ex.vstack(tc))


def find_gap_witness(spec: SupportSpec) -> Optional[JointDistribution]:
    """A law on ``spec`` that is two-color exchangeable but not exchangeable.

    Starts at the uniform law u on the support and moves along a two-color
    direction v that breaks exchangeability. v is first shifted by a multiple
    of u so its entries sum to zero. The step is the largest 1/2**k keeping
    every mass at least 1/(2 |support|). Returns None when no such direction
    exists.
    """
    tc = two_color_constraints(spec).matrix
    ex = exchangeability_constraints(spec).matrix
    ncols = len(spec.support)
    if ncols - rank(tc) == ncols - rank(ex.vstack(tc)):
        return None
    direction = next((v for v in nullspace_basis(tc) if not ex.annihilates(v)), None)
    if direction is None:
        raise WitnessConstructionError("witness construction failed")
    u = Fraction(1, ncols)
    drift = sum(direction)
    v = [x - drift * u for x in direction]
    floor = Fraction(1, 2 * ncols)
    t = Fraction(1)
    while any(u + t * x < floor for x in v):
        t /= 2
    p = [u + t * x for x in v]
    d = spec.to_distribution(p)
    if is_exchangeable(d).verdict or not is_two_color_exchangeable(d).verdict:
        raise WitnessConstructionError("witness construction failed")
    return d
