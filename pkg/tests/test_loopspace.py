import pytest
from hypothesis import given, strategies as st

from confhom.loopspace import (
    AdmissibleWord,
    enumerate_admissible,
    loop_space_generators,
    word_full_degree,
    word_reduced_degree,
)


def words(*tuples):
    return [AdmissibleWord(t) for t in tuples]


@pytest.mark.parametrize(
    "lambda_max,cap,expected",
    [
        (0, 8, [()]),
        (1, 8, [(), (1,), (1, 1), (1, 1, 1)]),
        (2, 4, [(), (1,), (2,), (1, 1), (1, 2), (2, 2)]),
    ],
)
def test_enumerate_admissible_examples(lambda_max, cap, expected):
    assert enumerate_admissible(lambda_max, cap) == words(*expected)


def test_admissible_word_rejects_bad_entries():
    with pytest.raises(ValueError):
        AdmissibleWord((2, 1))
    with pytest.raises(ValueError):
        AdmissibleWord((0, 1))


@given(st.integers(0, 4), st.integers(1, 40))
def test_enumeration_is_ordered_and_complete(lambda_max, cap):
    out = enumerate_admissible(lambda_max, cap)
    keys = [w.sort_key() for w in out]
    assert keys == sorted(set(keys))
    for w in out:
        assert 2 ** len(w) <= cap
        assert w.excess <= lambda_max
    # count check: nondecreasing words of length r over lambda_max letters
    from math import comb

    max_len = cap.bit_length() - 1
    if lambda_max == 0:
        assert len(out) == 1
    else:
        assert len(out) == sum(comb(lambda_max + r - 1, r) for r in range(max_len + 1))


@pytest.mark.parametrize(
    "word,q,expected",
    [((1, 1), 0, 3), ((), 1, 1), ((1,), 1, 3)],
)
def test_word_reduced_degree_examples(word, q, expected):
    assert word_reduced_degree(AdmissibleWord(word), q) == expected


def test_reduced_degree_cross_check_full_degree():
    w = AdmissibleWord((1,))
    for n in (1, 2):
        assert word_full_degree(w, 1, n) == 1 + 2 * (1 + n)
        assert word_reduced_degree(w, 1) + n * 2 == word_full_degree(w, 1, n)


def test_y_j_degrees_match_closed_form():
    # |y_j| = (2^j - 1) + 2^j n
    for j in range(6):
        w = AdmissibleWord((1,) * j)
        for n in (1, 2, 3):
            assert word_full_degree(w, 0, n) == (2**j - 1) + 2**j * n


@given(
    st.lists(st.integers(1, 6), max_size=5).map(lambda xs: AdmissibleWord(tuple(sorted(xs)))),
    st.integers(0, 5),
)
def test_reduced_plus_shift_is_full_degree(word, q):
    for n in (1, 2, 3):
        assert word_reduced_degree(word, q) + n * 2 ** len(word) == word_full_degree(word, q, n)


def test_braid_factor_generators():
    gens = loop_space_generators(2, 0, 2, 8)
    assert [(g.reduced_degree, g.weight) for g in gens] == [(0, 1), (1, 2), (3, 4), (7, 8)]
    assert not any(g.exterior for g in gens)


def test_single_loop_factor():
    gens = loop_space_generators(1, 1, 2, 8)
    assert [(g.reduced_degree, g.weight, g.exterior) for g in gens] == [(1, 1, False)]


def test_top_class_is_exterior():
    gens = loop_space_generators(0, 2, 2, 8)
    assert [(g.reduced_degree, g.weight, g.exterior) for g in gens] == [(2, 1, True)]


def test_rejects_negative_or_inconsistent_loop_order():
    with pytest.raises(ValueError):
        loop_space_generators(-1, 3, 2, 4)
    with pytest.raises(ValueError):
        loop_space_generators(2, 1, 2, 4)


@given(st.integers(1, 4), st.integers(0, 3), st.integers(1, 64))
def test_generator_invariants(m, q, cap):
    if q > m:
        q = m
    gens = loop_space_generators(m - q, q, m, cap)
    ids = [g.id for g in gens]
    assert len(ids) == len(set(ids))
    keys = [(g.weight, g.reduced_degree, g.word.entries) for g in gens]
    assert keys == sorted(keys)
    for g in gens:
        assert g.weight == 2 ** len(g.word)
        assert g.weight & (g.weight - 1) == 0
        assert g.weight <= cap
        lam = max(m - q - 1, 0)
        assert g.reduced_degree <= lam * (g.weight - 1) + q * g.weight
        if m <= 3:
            assert g.reduced_degree < 2 * g.weight + q * g.weight
        assert g.exterior == (m - q == 0)
        if m - q > 0:
            assert g.word.excess <= m - q - 1
        if q == 0 and m - q <= 2:
            assert g.reduced_degree == g.weight - 1
