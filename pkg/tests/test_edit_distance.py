from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from deideval.sensitivity.edit_distance import (
    levenshtein_distance,
    levenshtein_ratio,
    levenshtein_within,
)
from oracles import lev_recursive, lev_recursive_memo

short_text = st.text(alphabet="abc", max_size=8)
any_text = st.text(max_size=12)


def test_kitten_sitting():
    assert levenshtein_distance("kitten", "sitting") == 3


def test_identity_is_zero():
    for s in ["", "a", "abc", "same same"]:
        assert levenshtein_distance(s, s) == 0


def test_empty_versus_abc():
    assert levenshtein_distance("", "abc") == 3
    assert levenshtein_distance("abc", "") == 3


def test_exhaustive_against_recursive_oracle_small():
    # complete cross-product of strings up to length 3 over {a, b}
    universe = [""] + ["".join(p) for n in (1, 2, 3) for p in itertools.product("ab", repeat=n)]
    for a in universe:
        for b in universe:
            assert levenshtein_distance(a, b) == lev_recursive(a, b)


@settings(max_examples=300)
@given(short_text, short_text)
def test_matches_memoized_recursion(a, b):
    assert levenshtein_distance(a, b) == lev_recursive_memo(a, b)


@settings(max_examples=200)
@given(any_text, any_text)
def test_symmetry(a, b):
    assert levenshtein_distance(a, b) == levenshtein_distance(b, a)


@settings(max_examples=200)
@given(any_text, any_text, any_text)
def test_triangle_inequality(a, b, c):
    assert levenshtein_distance(a, c) <= (
        levenshtein_distance(a, b) + levenshtein_distance(b, c)
    )


@settings(max_examples=300)
@given(short_text, short_text, st.integers(min_value=0, max_value=10))
def test_bounded_variant_identical_within_limit(a, b, limit):
    exact = levenshtein_distance(a, b)
    bounded = levenshtein_within(a, b, limit)
    if exact <= limit:
        assert bounded == exact
    else:
        assert bounded == limit + 1


def test_bounded_variant_band_edges():
    assert levenshtein_within("abc", "abc", 0) == 0
    assert levenshtein_within("abc", "abd", 0) == 1  # over the limit marker
    assert levenshtein_within("abc", "abd", 1) == 1
    assert levenshtein_within("", "aaaa", 3) == 4
    assert levenshtein_within("", "aaaa", 4) == 4
    assert levenshtein_within("abcdef", "ghijkl", 2) == 3


def test_ratio_kitten_sitting():
    assert levenshtein_ratio("kitten", "sitting") == pytest.approx(1 - 3 / 7)


def test_ratio_identity():
    for s in ["x", "abc", "Tim"]:
        assert levenshtein_ratio(s, s) == 1.0


def test_ratio_case_folded():
    assert levenshtein_ratio("Tim", "tim") == 1.0
    assert levenshtein_ratio("ANA REIS", "ana reis") == 1.0


def test_ratio_both_empty_is_an_error():
    with pytest.raises(ValueError, match="undefined ratio"):
        levenshtein_ratio("", "")


def test_ratio_stays_in_unit_interval_for_expanding_folds():
    # the sharp s folds to "ss", lengthening the string
    value = levenshtein_ratio("ß", "x")
    assert 0.0 <= value <= 1.0


@settings(max_examples=200)
@given(any_text, any_text)
def test_ratio_bounds(a, b):
    if not a and not b:
        return
    assert 0.0 <= levenshtein_ratio(a, b) <= 1.0
