import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graev.errors import ResourceLimitError
from graev.freegroup import (
    IDENTITY_WORD,
    Letter,
    Point,
    Word,
    invert,
    letter_distance,
    multiply,
    neg,
    pos,
    reduce_word,
    word,
)
from graev.graevmetric import (
    graev_bidistance,
    graev_distance,
    graev_norm_bruteforce,
    graev_norm_dp,
)
from graev.matching import apply_match, rho
from graev.sampling import exhaustive_reduced_words, sample_reduced_word

from conftest import ALPHA3, DEEP_POINTS


def test_norm_examples():
    assert graev_norm_dp(IDENTITY_WORD) == 0
    assert graev_norm_bruteforce(IDENTITY_WORD).value == 0
    assert graev_norm_dp(word(neg(1, 2), pos(1, 3))) == F(1, 2)
    assert graev_norm_bruteforce(word(neg(1, 2), pos(1, 3))).value == F(1, 2)
    # identity match costs 2; pairing costs d(Pos[2], Neg[1]) = 1
    assert graev_norm_dp(word(pos(1), pos(2))) == 1


def test_norm_reduces_input_first():
    w = Word((pos(1), neg(1), pos(2)))
    assert graev_norm_dp(w) == graev_norm_dp(word(pos(2))) == 1


def test_bruteforce_witness_attains_value():
    for letters in [
        (neg(1, 2), pos(1, 3)),
        (pos(1), pos(2), neg(1)),
        (pos(1), pos(1), pos(2), neg(1)),
    ]:
        w = reduce_word(Word(letters))
        res = graev_norm_bruteforce(w)
        assert rho(w, apply_match(w, res.witness)) == res.value


def test_dp_equals_bruteforce_exhaustive_small():
    for w in exhaustive_reduced_words(list(ALPHA3), 4):
        assert graev_norm_dp(w) == graev_norm_bruteforce(w).value


@given(st.integers(0, 2**32 - 1), st.integers(1, 10))
@settings(max_examples=150, deadline=None)
def test_dp_equals_bruteforce_random(seed, max_len):
    rng = random.Random(seed)
    w = sample_reduced_word(rng, DEEP_POINTS, max_len, uniform_length=True)
    assert graev_norm_dp(w) == graev_norm_bruteforce(w).value


def test_enumeration_cap_error_names_cap(monkeypatch):
    long_word = Word(tuple(pos(k + 1) for k in range(15)))
    with pytest.raises(ResourceLimitError, match="cap 14"):
        graev_norm_bruteforce(long_word)
    monkeypatch.setenv("GRAEV_MATCH_CAP", "4")
    with pytest.raises(ResourceLimitError, match="cap 4"):
        graev_norm_bruteforce(word(pos(1), pos(2), pos(3), pos(4), pos(5)))
    # DP path is uncapped; seven unit-cost arcs plus one fixed point
    assert graev_norm_dp(long_word) == 8


def test_distance_examples():
    u = word(pos(1, 2))
    assert graev_distance(u, u) == 0
    assert graev_distance(word(pos(1, 2)), word(pos(1, 3))) == F(1, 2)
    assert graev_bidistance(word(pos(1, 2)), word(pos(1, 3))) == 1
    assert graev_bidistance(u, u) == 0


def test_metric_axioms_small():
    words = exhaustive_reduced_words(list(ALPHA3), 2)
    dist = {}
    for u, v in itertools.product(words, repeat=2):
        dist[u, v] = graev_distance(u, v)
    for u, v in itertools.product(words, repeat=2):
        assert (dist[u, v] == 0) == (u == v)
        assert dist[u, v] == dist[v, u]
    sample = words[::4]
    for u, v, w_ in itertools.product(sample, repeat=3):
        assert dist[u, w_] <= dist[u, v] + dist[v, w_]


def test_extension_on_single_letters():
    letters = [Letter(s, p) for p in DEEP_POINTS for s in (1, -1)]
    letters.append(Letter(0, None))
    for a, b in itertools.combinations(letters, 2):
        assert graev_distance(word(a), word(b)) == letter_distance(a, b)


def test_left_invariance_small():
    words = exhaustive_reduced_words(list(ALPHA3), 2)
    gs = [word(Letter(s, p)) for p in ALPHA3 for s in (1, -1)] + [IDENTITY_WORD]
    for g in gs:
        for u, v in itertools.product(words[::3], repeat=2):
            assert graev_distance(multiply(g, u), multiply(g, v)) == graev_distance(u, v)


def test_conjugation_invariance_trivial_scale():
    words = exhaustive_reduced_words(list(ALPHA3), 3)
    gs = [word(Letter(s, p)) for p in ALPHA3 for s in (1, -1)]
    for g in gs:
        for u in words[::5]:
            conj = multiply(multiply(invert(g), u), g)
            assert graev_norm_dp(conj) == graev_norm_dp(u)


def test_norm_symmetric_under_inversion():
    for w in exhaustive_reduced_words(list(ALPHA3), 3)[::3]:
        assert graev_norm_dp(w) == graev_norm_dp(invert(w))


def test_discreteness_depth_two():
    pts = [Point(()), Point((1,)), Point((1, 2)), Point((0, 2))]
    rng = random.Random(7)
    for _ in range(100):
        u = sample_reduced_word(rng, pts, 3)
        v = sample_reduced_word(rng, pts, 3)
        if u != v:
            assert graev_bidistance(u, v) >= F(1, 4)


def test_bruteforce_value_schedule_independent():
    # the minimum value must not depend on enumeration chunking: compare
    # against a reversed-order scan of the same match stream
    from graev.matching import Match, match_maps

    w = reduce_word(word(pos(1), pos(2), neg(1, 2), pos(1)))
    res = graev_norm_bruteforce(w)
    best = min(
        rho(w, apply_match(w, Match(t))) for t in reversed(list(match_maps(len(w))))
    )
    assert best == res.value
