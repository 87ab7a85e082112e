"""Slice, dice, and roll-up behavior against hand-filtered expectations."""

import pytest
from hypothesis import given, strategies as st

from pivotcube import (
    DimensionDef,
    DimensionFilter,
    EMPTY_FILTER,
    FactRow,
    MeasureDef,
    StarSchema,
    build_cube,
    dice,
    grand_total,
    rollup,
    slice_cube,
)
from pivotcube.errors import (
    EmptyKeepSetError,
    InvalidFilterError,
    UnknownDimensionError,
)

from conftest import STUDENT_ROWS


def _oracle_total(year=None, gen=None, years=None):
    """Independent sum over the raw fixture tuples."""
    total = 0
    for y, d, s, g, m in STUDENT_ROWS:
        if year is not None and y != year:
            continue
        if years is not None and y not in years:
            continue
        if gen is not None and g != gen:
            continue
        total += m
    return total


def test_slice_year_2000(student_cube):
    sliced = slice_cube(student_cube, "Year", "2000")
    assert len(sliced.rows) == 5
    assert grand_total(sliced) == 68
    assert sliced.n == student_cube.n
    assert sliced.schema == student_cube.schema


def test_slice_absent_value_gives_empty_cube(student_cube):
    sliced = slice_cube(student_cube, "Year", "1999")
    assert sliced.rows == ()
    assert grand_total(sliced) == 0
    assert sliced.n == 4


def test_slice_unknown_dimension(student_cube):
    with pytest.raises(UnknownDimensionError):
        slice_cube(student_cube, "Month", "1")


def test_slice_composes(student_cube):
    twice = slice_cube(slice_cube(student_cube, "Year", "2000"), "Gen", "p")
    assert sorted(row.measure for row in twice.rows) == [10, 11, 12]
    assert grand_total(twice) == _oracle_total(year="2000", gen="p") == 33


def test_dice_conjunction_of_clauses(student_cube):
    where = DimensionFilter({"Year": {"2000", "2001"}, "Gen": {"p"}})
    diced = dice(student_cube, where)
    assert grand_total(diced) == _oracle_total(years={"2000", "2001"}, gen="p") == 92


def test_dice_empty_filter_is_identity(student_cube):
    assert dice(student_cube, EMPTY_FILTER) == student_cube


def test_dice_full_domain_clause_is_identity(student_cube):
    all_years = {row.coords["Year"] for row in student_cube.rows}
    assert dice(student_cube, DimensionFilter({"Year": all_years})) == student_cube


def test_dice_unknown_dimension(student_cube):
    with pytest.raises(UnknownDimensionError):
        dice(student_cube, DimensionFilter({"Month": {"1"}}))


def test_filter_rejects_empty_value_set():
    with pytest.raises(InvalidFilterError):
        DimensionFilter({"Year": set()})


def test_filter_from_args():
    where = DimensionFilter.from_args(["Year=2000,2001", "Gen=p", "Year=2002"])
    assert where.clauses == {
        "Year": frozenset({"2000", "2001", "2002"}),
        "Gen": frozenset({"p"}),
    }


@pytest.mark.parametrize("arg", ["Year", "=2000", "Year="])
def test_filter_from_args_rejects_malformed(arg):
    with pytest.raises(InvalidFilterError):
        DimensionFilter.from_args([arg])


def test_rollup_to_year(student_cube):
    rolled = rollup(student_cube, {"Year"})
    assert rolled.n == 1
    assert {row.coords["Year"]: row.measure for row in rolled.rows} == {
        "2000": 68,
        "2001": 106,
        "2002": 154,
    }
    assert grand_total(rolled) == 328


def test_rollup_merges_over_dropped_dimension(student_cube):
    rolled = rollup(student_cube, {"Year", "Deg", "Gen"})
    cells = {
        (row.coords["Year"], row.coords["Deg"], row.coords["Gen"]): row.measure
        for row in rolled.rows
    }
    assert cells[("2000", "5", "p")] == 21  # 11 + 10 merged over SP


def test_rollup_keeping_everything_merges_duplicates():
    schema = StarSchema((DimensionDef("D"),), MeasureDef("m"))
    cube = build_cube(schema, [FactRow({"D": "a"}, 1), FactRow({"D": "a"}, 2)])
    rolled = rollup(cube, {"D"})
    assert [(row.coords["D"], row.measure) for row in rolled.rows] == [("a", 3)]
    assert grand_total(rolled) == grand_total(cube)


def test_rollup_orders_groups_by_first_appearance():
    schema = StarSchema((DimensionDef("D"), DimensionDef("E")), MeasureDef("m"))
    cube = build_cube(
        schema,
        [
            FactRow({"D": "z", "E": "1"}, 1),
            FactRow({"D": "a", "E": "2"}, 2),
            FactRow({"D": "z", "E": "3"}, 3),
        ],
    )
    rolled = rollup(cube, {"D"})
    assert [row.coords["D"] for row in rolled.rows] == ["z", "a"]


def test_rollup_requires_non_empty_keep(student_cube):
    with pytest.raises(EmptyKeepSetError):
        rollup(student_cube, set())


def test_rollup_unknown_dimension(student_cube):
    with pytest.raises(UnknownDimensionError):
        rollup(student_cube, {"Month"})


# Random small cubes for the algebraic properties.
_DIMS = ("A", "B", "C")
_VALUES = ("x", "y", "z")


@st.composite
def cubes(draw):
    k = draw(st.integers(1, 3))
    dims = _DIMS[:k]
    schema = StarSchema(tuple(DimensionDef(d) for d in dims), MeasureDef("m"))
    rows = draw(
        st.lists(
            st.builds(
                FactRow,
                coords=st.fixed_dictionaries({d: st.sampled_from(_VALUES) for d in dims}),
                measure=st.integers(0, 50),
            ),
            max_size=12,
        )
    )
    return build_cube(schema, rows)


@given(cubes(), st.data())
def test_rollup_conserves_grand_total(cube, data):
    names = list(cube.schema.dimension_names)
    keep = data.draw(st.sets(st.sampled_from(names), min_size=1))
    assert grand_total(rollup(cube, keep)) == grand_total(cube)


@given(cubes(), st.data())
def test_rollup_composition(cube, data):
    names = list(cube.schema.dimension_names)
    k1 = data.draw(st.sets(st.sampled_from(names), min_size=1))
    k2 = data.draw(st.sets(st.sampled_from(sorted(k1)), min_size=1))

    def normalized(c):
        names = c.schema.dimension_names
        groups = {}
        for row in c.rows:
            groups[tuple(row.coords[n] for n in names)] = row.measure
        return c.schema, groups

    assert normalized(rollup(rollup(cube, k1), k2)) == normalized(rollup(cube, k2))


@given(cubes())
def test_grand_total_permutation_invariance(cube):
    reversed_cube = build_cube(cube.schema, list(reversed(cube.rows)))
    assert grand_total(reversed_cube) == grand_total(cube)
