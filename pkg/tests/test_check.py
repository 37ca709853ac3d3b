import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randdist import brute_pushforward, random_distribution
from twocolor.check import (
    VerificationReport,
    is_exchangeable,
    is_exchangeable_oracle,
    is_two_color_exchangeable,
    orbit_key,
)
from twocolor.constructions import general_counterexample, pair_counterexample
from twocolor.dist import Alphabet, make_distribution, pushforward, relabel, symmetrize

TERNARY = Alphabet((-1, 0, 1))
F = Fraction


def brute_two_color(d):
    """Every one of the 2^k colorings, constants included, via the permutation oracle."""
    for bits in itertools.product((0, 1), repeat=len(d.alphabet)):
        ones = {s for s, b in zip(d.alphabet.symbols, bits) if b}
        pf = make_distribution((0, 1), d.n, brute_pushforward(d, ones).items())
        if not is_exchangeable_oracle(pf):
            return False
    return True


def test_orbit_key():
    assert orbit_key((1, -1, 0), TERNARY) == (-1, 0, 1)
    assert orbit_key((0, 0), TERNARY) == (0, 0)
    keys = {orbit_key(o, TERNARY) for o in [(-1, -1, 1), (-1, 1, -1), (1, -1, -1)]}
    assert keys == {(-1, -1, 1)}
    # alphabet order, not numeric order
    assert orbit_key((1, 0, 2), Alphabet((2, 1, 0))) == (2, 1, 0)


def test_pair_not_exchangeable():
    r = is_exchangeable(pair_counterexample())
    assert not r.verdict
    w = r.witness
    assert (w.first, w.first_mass, w.second, w.second_mass) == ((-1, 0), F(1, 9), (0, -1), F(2, 9))
    assert r.to_text() == "verdict: FAIL\nwitness: (-1,0) mass 1/9 != (0,-1) mass 2/9"


def test_pair_two_color():
    assert is_two_color_exchangeable(pair_counterexample()).verdict
    assert is_exchangeable_oracle(pair_counterexample()) is False


def test_uniform_cube_oracle():
    d = make_distribution((0, 1), 3, [(o, F(1, 8)) for o in itertools.product((0, 1), repeat=3)])
    assert is_exchangeable_oracle(d)
    assert is_exchangeable(d).verdict


def test_oracle_guard():
    d = make_distribution((0,), 9, [((0,) * 9, F(1))])
    with pytest.raises(ValueError, match="oracle guard exceeded"):
        is_exchangeable_oracle(d)


def test_general_three_not_exchangeable():
    r = is_exchangeable(general_counterexample(3))
    assert not r.verdict
    # smallest violating pair lies in the orbit of (-1,-1,0)
    assert (r.witness.first, r.witness.second) == ((-1, -1, 0), (-1, 0, -1))
    assert (r.witness.first_mass, r.witness.second_mass) == (F(1, 12), F(1, 18))


def test_two_color_failure_names_first_coloring():
    d = make_distribution(TERNARY, 2, [((-1, 0), F(1, 2)), ((0, -1), F(1, 4)), ((1, 1), F(1, 4))])
    assert not brute_two_color(d)
    r = is_two_color_exchangeable(d)
    assert not r.verdict
    assert set(r.coloring.ones) == {0}
    w = r.witness
    assert (w.first, w.first_mass, w.second, w.second_mass) == ((0, 1), F(1, 2), (1, 0), F(1, 4))
    assert r.to_text().splitlines()[-1] == "coloring: ones={0}"


def test_incomplete_orbit_witness_uses_zero_mass_member():
    d = make_distribution(TERNARY, 2, [((0, -1), F(1, 2)), ((1, 1), F(1, 2))])
    w = is_exchangeable(d).witness
    assert (w.first, w.first_mass, w.second, w.second_mass) == ((-1, 0), 0, (0, -1), F(1, 2))


def test_incomplete_orbit_with_present_key():
    d = make_distribution(TERNARY, 3, [((-1, 0, 0), F(1, 2)), ((0, -1, 0), F(1, 2))])
    w = is_exchangeable(d).witness
    assert (w.first, w.second, w.second_mass) == ((-1, 0, 0), (0, 0, -1), 0)


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport(False)
    assert VerificationReport(True).to_dict() == {"verdict": "PASS"}


def _self_certifying(d, r):
    w = r.witness
    assert orbit_key(w.first, d.alphabet) == orbit_key(w.second, d.alphabet)
    assert d.mass(w.first) == w.first_mass != w.second_mass == d.mass(w.second)
    assert d.alphabet.sort_key(w.first) < d.alphabet.sort_key(w.second)


def test_oracle_agreement_randomized():
    rng = random.Random(2024)
    seen = set()
    for _ in range(400):
        d = random_distribution(rng)
        r = is_exchangeable(d)
        assert r.verdict == is_exchangeable_oracle(d)
        seen.add(r.verdict)
        if not r.verdict:
            _self_certifying(d, r)
    assert seen == {True, False}


def test_two_color_against_exhaustive_colorings():
    rng = random.Random(99)
    verdicts = set()
    for _ in range(200):
        d = random_distribution(rng, n_max=4)
        r = is_two_color_exchangeable(d)
        assert r.verdict == brute_two_color(d)
        verdicts.add(r.verdict)
        if not r.verdict:
            _self_certifying(pushforward(d, r.coloring), r)
    assert verdicts == {True, False}


@settings(max_examples=150)
@given(st.randoms(use_true_random=False))
def test_symmetrized_passes_both(rnd):
    d = symmetrize(random_distribution(rnd, n_max=4))
    assert is_exchangeable(d).verdict
    assert is_two_color_exchangeable(d).verdict


@settings(max_examples=150)
@given(st.randoms(use_true_random=False))
def test_exchangeable_implies_two_color(rnd):
    d = random_distribution(rnd)
    if is_exchangeable(d).verdict:
        assert is_two_color_exchangeable(d).verdict


@settings(max_examples=150)
@given(st.randoms(use_true_random=False))
def test_binary_alphabet_verdicts_coincide(rnd):
    d = random_distribution(rnd)
    if len(d.alphabet) <= 2:
        assert is_two_color_exchangeable(d).verdict == is_exchangeable(d).verdict


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_relabel_invariance(rnd):
    d = random_distribution(rnd)
    targets = rnd.sample(range(10, 20), len(d.alphabet))
    mapping = dict(zip(d.alphabet.symbols, targets))
    e = relabel(d, mapping)
    assert is_exchangeable(e).verdict == is_exchangeable(d).verdict
    assert is_two_color_exchangeable(e).verdict == is_two_color_exchangeable(d).verdict
