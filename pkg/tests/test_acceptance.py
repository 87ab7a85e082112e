"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line and enforcing its time budget (run with ``pytest -s`` to see
the lines as they happen)."""

import random
from contextlib import contextmanager
from time import perf_counter

import pytest

from pivotcube import (
    DimensionFilter,
    PivotConfig,
    brute_force_count,
    drilldown,
    enumerate_views,
    fixture_path,
    grand_total,
    load_cube,
    load_manifest,
    pivot,
    query_text,
    rollup,
    slice_cube,
    total_view_count,
    view_count,
)


@contextmanager
def criterion(name, budget=None):
    start = perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL  {name}")
        raise
    elapsed = perf_counter() - start
    if budget is not None and elapsed >= budget:
        print(f"FAIL  {name} ({elapsed:.3f}s, budget {budget:g}s)")
        pytest.fail(f"{name}: took {elapsed:.3f}s, budget {budget:g}s")
    print(f"PASS  {name} ({elapsed:.3f}s)")


@pytest.fixture(scope="module")
def student():
    manifest = load_manifest(fixture_path())
    cube, details = load_cube(manifest)
    return manifest, cube, details


def test_year_2000_gender_degree_report(student):
    _, cube, _ = student
    with criterion("Year-2000 pivot: gender rows x degree columns (21/12/22/13)", budget=1.0):
        report = pivot(
            cube, PivotConfig("Gen", ("Deg",)), DimensionFilter({"Year": {"2000"}})
        )
        assert report.cells == {
            ("p", ("5",)): 21,
            ("p", ("3",)): 12,
            ("w", ("5",)): 22,
            ("w", ("3",)): 13,
        }


def test_rollup_conservation(student):
    _, cube, _ = student
    with criterion("Roll-up conservation (keep Year: 68/106/154 sums to 328)", budget=1.0):
        rolled = rollup(cube, {"Year"})
        totals = {row.coords["Year"]: row.measure for row in rolled.rows}
        assert totals == {"2000": 68, "2001": 106, "2002": 154}
        assert 68 + 106 + 154 == 328 == grand_total(cube) == grand_total(rolled)


def test_three_dimension_census(student):
    with criterion("Three-dimension view census (3/6/3, total 12)", budget=1.0):
        census = total_view_count(3)
        assert census.per_r == (3, 6, 3)
        assert census.total == 12
        assert census.per_horizontal == 4
        assert enumerate_views(("A", "B", "C"), 1) == [
            PivotConfig("A"), PivotConfig("B"), PivotConfig("C"),
        ]
        assert enumerate_views(("A", "B", "C"), 2) == [
            PivotConfig("A", ("B",)), PivotConfig("A", ("C",)),
            PivotConfig("B", ("A",)), PivotConfig("B", ("C",)),
            PivotConfig("C", ("A",)), PivotConfig("C", ("B",)),
        ]
        assert enumerate_views(("A", "B", "C"), 3) == [
            PivotConfig("A", ("B", "C")),
            PivotConfig("B", ("A", "C")),
            PivotConfig("C", ("A", "B")),
        ]


def test_formula_oracle_agreement():
    with criterion("Formula/oracle agreement for n in 1..8, all r", budget=5.0):
        for n in range(1, 9):
            dims = tuple("ABCDEFGH"[:n])
            per_r = []
            for r in range(1, n + 1):
                formula = view_count(n, r)
                assert brute_force_count(dims, r) == formula
                assert len(enumerate_views(dims, r)) == formula
                per_r.append(formula)
            assert sum(per_r) == n * 2 ** (n - 1)


def test_endpoint_symmetry():
    with criterion("Endpoint symmetry: first and last counts equal n, n in 1..20"):
        for n in range(1, 21):
            assert view_count(n, 1) == view_count(n, n) == n


def test_vertical_swap_invariance(student):
    _, cube, _ = student
    with criterion("Vertical-swap invariance (Deg,Gen vs Gen,Deg)", budget=1.0):
        base = pivot(cube, PivotConfig("Year", ("Deg", "Gen"), ("Deg", "Gen")))
        swapped = pivot(cube, PivotConfig("Year", ("Deg", "Gen"), ("Gen", "Deg")))
        assert base.cells == swapped.cells
        assert base.grand_total == swapped.grand_total == 328
        assert base.legend_labels != swapped.legend_labels


def test_drilldown_consistency(student):
    _, cube, details = student
    manifest = student[0]
    with criterion("Drill-down consistency (cell 2000/5/11/p has 11 detail rows)", budget=1.0):
        result = drilldown(
            cube,
            {"Year": "2000", "Deg": "5", "SP": "11", "Gen": "p"},
            details[0],
            manifest.details[0].rules,
        )
        assert result.cardinality == 11
        assert len(result.detail_rows) == 11
        assert result.consistency.status == "consistent"


def test_query_canon():
    dims = ("Alpha", "Beta", "Gamma", "Delta", "Epsilon")
    rng = random.Random(20080613)
    with criterion("Query canon: select list equals group-by list, 100 random configs",
                   budget=1.0):
        for _ in range(100):
            horizontal = rng.choice(dims)
            rest = [d for d in dims if d != horizontal]
            rng.shuffle(rest)
            verticals = tuple(rest[: rng.randint(0, 4)])
            where_dims = rng.sample(dims, rng.randint(0, 3))
            where = DimensionFilter(
                {d: {f"v{rng.randint(0, 9)}" for _ in range(rng.randint(1, 3))}
                 for d in where_dims}
            )
            text = query_text(
                PivotConfig(horizontal, verticals, verticals), where, "facts", "Amn"
            )
            select_part = text.split("select ", 1)[1].split(", sum(", 1)[0]
            group_part = text.rsplit(" group by ", 1)[1]
            assert select_part == group_part


def test_filter_pushdown_all_configs(student):
    _, cube, _ = student
    dims = cube.schema.dimension_names
    with criterion("Filter pushdown over all 32 pivot configs of the 4-dim cube",
                   budget=1.0):
        configs = [
            config
            for r in range(1, len(dims) + 1)
            for config in enumerate_views(dims, r)
        ]
        assert len(configs) == 32
        sliced = slice_cube(cube, "Year", "2000")
        where = DimensionFilter({"Year": {"2000"}})
        for config in configs:
            assert pivot(sliced, config).cells == pivot(cube, config, where).cells
