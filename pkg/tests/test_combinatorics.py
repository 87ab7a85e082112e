import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from pivotcube import (
    PivotConfig,
    brute_force_count,
    choose,
    enumerate_views,
    factorial,
    total_view_count,
    view_count,
)
from pivotcube.errors import DuplicateDimensionError, OutOfRangeError

LETTERS = "ABCDEFGHIJ"


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 2), (3, 6), (6, 720)])
def test_factorial_known_values(n, expected):
    assert factorial(n) == expected


@pytest.mark.parametrize("n", [-1, 21])
def test_factorial_out_of_range(n):
    with pytest.raises(OutOfRangeError):
        factorial(n)


def test_choose_known_values():
    assert choose(2, 0) == 1
    # oracle: enumerate all 2-element subsets of a 5-element set
    assert choose(5, 2) == len(list(combinations(range(5), 2))) == 10


@pytest.mark.parametrize("n", [0, 1, 5, 20])
def test_choose_boundaries(n):
    assert choose(n, 0) == 1
    assert choose(n, n) == 1


def test_choose_outside_range_is_zero():
    assert choose(5, -1) == 0
    assert choose(5, 6) == 0


def test_choose_negative_n_rejected():
    with pytest.raises(OutOfRangeError):
        choose(-1, 0)


@given(st.integers(0, 20), st.integers(-2, 22))
def test_choose_matches_stdlib_oracle(n, r):
    expected = math.comb(n, r) if 0 <= r <= n else 0
    assert choose(n, r) == expected


@given(st.integers(1, 20), st.integers(0, 20))
def test_choose_pascal_rule_and_symmetry(n, r):
    assert choose(n, r) == choose(n - 1, r - 1) + choose(n - 1, r)
    if 0 <= r <= n:
        assert choose(n, r) == choose(n, n - r)


@pytest.mark.parametrize("n,r,expected", [(3, 1, 3), (3, 2, 6), (3, 3, 3)])
def test_view_count_three_dimensions(n, r, expected):
    assert view_count(n, r) == expected


@given(st.integers(1, 20))
def test_view_count_single_dimension_views(n):
    assert view_count(n, 1) == n


def test_view_count_four_choose_two_matches_brute_force():
    assert view_count(4, 2) == brute_force_count(LETTERS[:4], 2) == 12


@pytest.mark.parametrize("n,r", [(3, 0), (3, 4), (0, 1)])
def test_view_count_out_of_range(n, r):
    with pytest.raises(OutOfRangeError):
        view_count(n, r)


def test_total_view_count_three_dimensions():
    census = total_view_count(3)
    assert census.per_r == (3, 6, 3)
    assert census.total == 12
    assert census.per_horizontal == 4


def test_total_view_count_single_dimension():
    census = total_view_count(1)
    assert census.per_r == (1,)
    assert census.total == 1
    assert census.per_horizontal == 1


def test_total_view_count_four_dimensions_matches_brute_force():
    census = total_view_count(4)
    dims = LETTERS[:4]
    assert census.total == sum(brute_force_count(dims, r) for r in range(1, 5)) == 32


@pytest.mark.parametrize("n", [0, 21])
def test_total_view_count_out_of_range(n):
    with pytest.raises(OutOfRangeError):
        total_view_count(n)


@given(st.integers(1, 20))
def test_census_invariants(n):
    census = total_view_count(n)
    assert census.per_r[0] == census.per_r[-1] == n
    assert census.total == n * 2 ** (n - 1)
    assert census.per_horizontal == 2 ** (n - 1)
    assert census.total == census.per_horizontal * n


def test_enumerate_views_pairs():
    views = enumerate_views(("A", "B", "C"), 2)
    assert views == [
        PivotConfig("A", ("B",)),
        PivotConfig("A", ("C",)),
        PivotConfig("B", ("A",)),
        PivotConfig("B", ("C",)),
        PivotConfig("C", ("A",)),
        PivotConfig("C", ("B",)),
    ]


def test_enumerate_views_full_width():
    views = enumerate_views(("A", "B", "C"), 3)
    assert views == [
        PivotConfig("A", ("B", "C")),
        PivotConfig("B", ("A", "C")),
        PivotConfig("C", ("A", "B")),
    ]


def test_enumerate_views_single_dimension():
    assert enumerate_views(("A",), 1) == [PivotConfig("A", ())]


def test_enumerate_views_sorts_unordered_input():
    views = enumerate_views(("C", "A", "B"), 1)
    assert [v.horizontal for v in views] == ["A", "B", "C"]


def test_enumerate_views_rejects_duplicates():
    with pytest.raises(DuplicateDimensionError):
        enumerate_views(("A", "A"), 1)


def test_enumerate_views_rejects_bad_r():
    with pytest.raises(OutOfRangeError):
        enumerate_views(("A", "B"), 3)


@given(st.integers(1, 6), st.data())
def test_enumerate_views_has_no_duplicate_views(n, data):
    r = data.draw(st.integers(1, n))
    views = enumerate_views(LETTERS[:n], r)
    keys = {(v.horizontal, frozenset(v.verticals)) for v in views}
    assert len(keys) == len(views)


def test_brute_force_collapses_ordered_sequences():
    # 6 ordered triples over {A,B,C} collapse to 3 canonical views
    assert brute_force_count(("A", "B", "C"), 3) == 3
    # nothing to deduplicate at r=1
    assert brute_force_count(("A", "B", "C"), 1) == 3
    # 24 ordered triples over 4 dimensions collapse to 12
    assert brute_force_count(("A", "B", "C", "D"), 3) == 12


def test_brute_force_dimension_cap():
    with pytest.raises(OutOfRangeError):
        brute_force_count(tuple("ABCDEFGHIJK"), 1)


def test_formula_enumeration_and_oracle_agree():
    for n in range(1, 9):
        dims = LETTERS[:n]
        for r in range(1, n + 1):
            formula = view_count(n, r)
            assert brute_force_count(dims, r) == formula
            assert len(enumerate_views(dims, r)) == formula
