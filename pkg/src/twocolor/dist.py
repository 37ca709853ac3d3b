"""Finite joint distributions over an ordered alphabet.

Outcomes are plain tuples of symbols. The order of the alphabet's symbols
fixes the lexicographic order of outcomes everywhere in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import format_rational, parse_rational

Outcome = tuple[int, ...]


class DistributionError(ValueError):
    """Raised when inputs violate the invariants of a joint distribution."""


class ParseError(DistributionError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def format_outcome(o: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in o) + ")"


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[int, ...]
    _index: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise DistributionError("alphabet must have at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise DistributionError(f"duplicate symbol in alphabet {symbols}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def index(self, s: int) -> int:
        return self._index[s]

    def sort_key(self, o: Sequence[int]) -> tuple[int, ...]:
        """Key that sorts outcomes lexicographically under the alphabet order."""
        return tuple(self._index[s] for s in o)

    def sorted(self, outcomes: Iterable[Outcome]) -> list[Outcome]:
        return sorted(outcomes, key=self.sort_key)


BINARY = Alphabet((0, 1))


@dataclass(frozen=True)
class JointDistribution:
    """Sparse law of a length-``n`` random vector; only positive masses are stored.

    Build instances through :func:`make_distribution`, which enforces the
    invariants.
    """

    alphabet: Alphabet
    n: int
    masses: Mapping[Outcome, Fraction]

    def mass(self, o: Outcome) -> Fraction:
        return self.masses.get(tuple(o), Fraction(0))

    def support(self) -> list[Outcome]:
        """Support outcomes in lexicographic order."""
        return self.alphabet.sorted(self.masses)

    def items(self) -> list[tuple[Outcome, Fraction]]:
        return [(o, self.masses[o]) for o in self.support()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JointDistribution):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.n == other.n
            and dict(self.masses) == dict(other.masses)
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.n, frozenset(self.masses.items())))


def _check_outcome(alphabet: Alphabet, n: int, o: Outcome) -> None:
    if len(o) != n:
        raise DistributionError(f"outcome {format_outcome(o)} has length {len(o)}, expected {n}")
    for s in o:
        if s not in alphabet:
            raise DistributionError(f"symbol {s} of outcome {format_outcome(o)} not in alphabet")


def make_distribution(
    alphabet: Alphabet | Sequence[int],
    n: int,
    entries: Iterable[tuple[Sequence[int], Fraction]],
) -> JointDistribution:
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    if n < 1:
        raise DistributionError("n must be at least 1")
    masses: dict[Outcome, Fraction] = {}
    seen: set[Outcome] = set()
    total = Fraction(0)
    for o, p in entries:
        o = tuple(o)
        p = Fraction(p)
        _check_outcome(alphabet, n, o)
        if o in seen:
            raise DistributionError(f"duplicate outcome {format_outcome(o)}")
        seen.add(o)
        if p < 0:
            raise DistributionError(f"negative mass at outcome {format_outcome(o)}")
        total += p
        if p:
            masses[o] = p
    if total != 1:
        raise DistributionError(f"not normalized (sum = {format_rational(total)})")
    return JointDistribution(alphabet, n, MappingProxyType(masses))


@dataclass(frozen=True)
class Coloring:
    """A map from the alphabet to {0, 1}, given by the symbols sent to 1."""

    alphabet: Alphabet
    ones: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ones", frozenset(self.ones))
        stray = [s for s in self.ones if s not in self.alphabet]
        if stray:
            raise DistributionError(f"coloring symbols {sorted(stray)} not in alphabet")

    def __call__(self, s: int) -> int:
        return int(s in self.ones)

    def complement(self) -> "Coloring":
        return Coloring(self.alphabet, frozenset(self.alphabet.symbols) - self.ones)

    def __str__(self) -> str:
        inside = ",".join(str(s) for s in self.alphabet if s in self.ones)
        return "ones={" + inside + "}"


def pushforward(d: JointDistribution, c: Coloring) -> JointDistribution:
    """Law of the coordinatewise image of ``d`` under ``c``, over {0, 1}."""
    if c.alphabet != d.alphabet:
        raise DistributionError("alphabet mismatch")
    out: dict[Outcome, Fraction] = {}
    for o, p in d.masses.items():
        b = tuple(c(s) for s in o)
        out[b] = out.get(b, Fraction(0)) + p
    return JointDistribution(BINARY, d.n, MappingProxyType(out))


def flip_binary(d: JointDistribution) -> JointDistribution:
    """Swap the labels 0 and 1 of a binary distribution."""
    if d.alphabet != BINARY:
        raise DistributionError("alphabet mismatch")
    return JointDistribution(
        BINARY, d.n, MappingProxyType({tuple(1 - x for x in o): p for o, p in d.masses.items()})
    )


def relabel(d: JointDistribution, mapping: Mapping[int, int], alphabet: Alphabet | None = None) -> JointDistribution:
    """Apply a symbol bijection to every outcome."""
    if alphabet is None:
        alphabet = Alphabet(tuple(mapping[s] for s in d.alphabet))
    return make_distribution(
        alphabet, d.n, [(tuple(mapping[s] for s in o), p) for o, p in d.masses.items()]
    )


def orbit_size(counts: Iterable[int]) -> int:
    """Multinomial coefficient: number of distinct arrangements of a multiset."""
    from math import factorial

    counts = list(counts)
    size = factorial(sum(counts))
    for k in counts:
        size //= factorial(k)
    return size


def distinct_permutations(o: Sequence[int], alphabet: Alphabet) -> Iterator[Outcome]:
    """Every rearrangement of ``o``, once each, in lexicographic order."""
    idx = sorted(alphabet.index(s) for s in o)
    syms = alphabet.symbols
    while True:
        yield tuple(syms[i] for i in idx)
        # next permutation
        k = len(idx) - 2
        while k >= 0 and idx[k] >= idx[k + 1]:
            k -= 1
        if k < 0:
            return
        j = len(idx) - 1
        while idx[j] <= idx[k]:
            j -= 1
        idx[k], idx[j] = idx[j], idx[k]
        idx[k + 1 :] = reversed(idx[k + 1 :])


def symmetrize(d: JointDistribution) -> JointDistribution:
    """Average ``d`` over all coordinate permutations.

    Averaging over the n! permutations spreads each orbit's total mass evenly
    over the orbit's distinct members, which is what is computed here.
    """
    totals: dict[Outcome, Fraction] = {}
    for o, p in d.masses.items():
        key = tuple(sorted(o, key=d.alphabet.index))
        totals[key] = totals.get(key, Fraction(0)) + p
    out: dict[Outcome, Fraction] = {}
    for key, total in totals.items():
        members = list(distinct_permutations(key, d.alphabet))
        share = total / len(members)
        for m in members:
            out[m] = share
    return JointDistribution(d.alphabet, d.n, MappingProxyType(out))


def nontrivial_colorings(a: Alphabet) -> list[Coloring]:
    """One coloring per complementary pair of non-constant colorings.

    Ordered by bitmask over the alphabet positions; the symbol at position 0
    is always colored 0.
    """
    k = len(a)
    return [
        Coloring(a, frozenset(s for i, s in enumerate(a.symbols) if mask >> i & 1))
        for mask in range(2, 1 << k, 2)
    ]


# ---------------------------------------------------------------- text format

_OUTCOME_LINE = re.compile(r"^\(([^()]*)\)\s+(\S+)$")


def dumps(d: JointDistribution) -> str:
    lines = [
        "alphabet: " + " ".join(str(s) for s in d.alphabet),
        f"n: {d.n}",
    ]
    lines += [f"{format_outcome(o)} {format_rational(p)}" for o, p in d.items()]
    return "\n".join(lines) + "\n"


def _parse_int(text: str, lineno: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(lineno, f"bad {what} {text!r}") from None


def loads(text: str) -> JointDistribution:
    """Parse the line-oriented distribution format written by :func:`dumps`."""
    alphabet: Alphabet | None = None
    n: int | None = None
    entries: list[tuple[Outcome, Fraction]] = []
    seen: set[Outcome] = set()
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        if alphabet is None:
            if not line.startswith("alphabet:"):
                raise ParseError(lineno, "expected 'alphabet: s1 s2 ...'")
            syms = line[len("alphabet:") :].split()
            symbols = tuple(_parse_int(s, lineno, "symbol") for s in syms)
            try:
                alphabet = Alphabet(symbols)
            except DistributionError as e:
                raise ParseError(lineno, str(e)) from None
        elif n is None:
            if not line.startswith("n:"):
                raise ParseError(lineno, "expected 'n: <length>'")
            n = _parse_int(line[2:].strip(), lineno, "length")
            if n < 1:
                raise ParseError(lineno, "n must be at least 1")
        else:
            m = _OUTCOME_LINE.match(line)
            if m is None:
                raise ParseError(lineno, "expected '(<c1>,...,<cn>) <p/q>'")
            coords = tuple(_parse_int(c.strip(), lineno, "coordinate") for c in m.group(1).split(","))
            try:
                p = parse_rational(m.group(2))
                _check_outcome(alphabet, n, coords)
            except ValueError as e:
                raise ParseError(lineno, str(e)) from None
            if coords in seen:
                raise ParseError(lineno, f"duplicate outcome {format_outcome(coords)}")
            if p < 0:
                raise ParseError(lineno, f"negative mass at outcome {format_outcome(coords)}")
            seen.add(coords)
            entries.append((coords, p))
    if alphabet is None or n is None:
        raise ParseError(last + 1, "missing header")
    return make_distribution(alphabet, n, entries)
