"""Exact exchangeability and two-color exchangeability verdicts."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .dist import (
    Alphabet,
    Coloring,
    JointDistribution,
    Outcome,
    distinct_permutations,
    format_outcome,
    nontrivial_colorings,
    orbit_size,
    pushforward,
)
from .linalg import format_rational

ORACLE_MAX_N = 8


@dataclass(frozen=True)
class Witness:
    """Two rearrangements of one another that carry different masses."""

    first: Outcome
    first_mass: Fraction
    second: Outcome
    second_mass: Fraction

    def __str__(self) -> str:
        return (
            f"{format_outcome(self.first)} mass {format_rational(self.first_mass)} != "
            f"{format_outcome(self.second)} mass {format_rational(self.second_mass)}"
        )


@dataclass(frozen=True)
class VerificationReport:
    verdict: bool
    witness: Optional[Witness] = None
    # set only for two-color failures; the witness then lives in the pushforward
    coloring: Optional[Coloring] = None

    def __post_init__(self) -> None:
        if self.verdict == (self.witness is not None):
            raise ValueError("a failing report needs a witness and a passing one must not have one")

    def __bool__(self) -> bool:
        return self.verdict

    def to_text(self) -> str:
        lines = [f"verdict: {'PASS' if self.verdict else 'FAIL'}"]
        if self.witness is not None:
            lines.append(f"witness: {self.witness}")
        if self.coloring is not None:
            lines.append(f"coloring: {self.coloring}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        out: dict = {"verdict": "PASS" if self.verdict else "FAIL"}
        if self.witness is not None:
            w = self.witness
            out["witness"] = {
                "outcomes": [list(w.first), list(w.second)],
                "masses": [format_rational(w.first_mass), format_rational(w.second_mass)],
            }
        if self.coloring is not None:
            out["coloring"] = {"ones": [s for s in self.coloring.alphabet if s in self.coloring.ones]}
        return out


def orbit_key(o: Sequence[int], alphabet: Alphabet | None = None) -> Outcome:
    """Canonical orbit representative: coordinates sorted by alphabet order."""
    if alphabet is None:
        return tuple(sorted(o))
    return tuple(sorted(o, key=alphabet.index))


def _orbit_witness(d: JointDistribution, key: Outcome, members: list[Outcome]) -> Optional[Witness]:
    """Smallest unequal pair in the orbit of ``key``, or None if the orbit is uniform.

    ``members`` are the orbit's support points. The key is the orbit's
    lexicographically smallest element, so it is always the first half of the
    smallest pair.
    """
    complete = len(members) == orbit_size(Counter(key).values())
    masses = {d.masses[m] for m in members}
    if complete and len(masses) == 1:
        return None
    first_mass = d.mass(key)
    if first_mass == 0:
        second = min(members, key=d.alphabet.sort_key)
    else:
        # every member with the key's (positive) mass is stored, so this walk
        # ends within len(members) + 1 steps
        second = next(o for o in distinct_permutations(key, d.alphabet) if d.mass(o) != first_mass)
    return Witness(key, first_mass, second, d.mass(second))


def is_exchangeable(d: JointDistribution) -> VerificationReport:
    """Mass must be constant on every permutation orbit that meets the support.

    Orbits are never materialized; an orbit whose stored members fall short
    of its multinomial size has zero-mass members and is therefore violating.
    """
    groups: dict[Outcome, list[Outcome]] = defaultdict(list)
    for o in d.masses:
        groups[orbit_key(o, d.alphabet)].append(o)
    for key in d.alphabet.sorted(groups):
        w = _orbit_witness(d, key, groups[key])
        if w is not None:
            return VerificationReport(False, w)
    return VerificationReport(True)


def is_exchangeable_oracle(d: JointDistribution) -> bool:
    """Brute-force check against every one of the n! coordinate permutations."""
    if d.n > ORACLE_MAX_N:
        raise ValueError("oracle guard exceeded")
    for perm in itertools.permutations(range(d.n)):
        for o, p in d.masses.items():
            if d.mass(tuple(o[i] for i in perm)) != p:
                return False
    return True


def is_two_color_exchangeable(d: JointDistribution) -> VerificationReport:
    """Every non-constant coloring must push ``d`` to an exchangeable binary law.

    A coloring and its complement give the same verdict, so only one member
    of each complementary pair is tried. The first failure in enumeration
    order is reported.
    """
    for c in nontrivial_colorings(d.alphabet):
        r = is_exchangeable(pushforward(d, c))
        if not r.verdict:
            return VerificationReport(False, r.witness, c)
    return VerificationReport(True)
