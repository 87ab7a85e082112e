"""OLAP operations over immutable cubes.

Slice, dice, roll-up and drill-down, pivot aggregation into 2-D reports,
canonical group-by query text, and chart-series emission. All functions are
pure: they take a cube and return new cubes, reports, or plain data, so any
number of readers can share one cube.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    ConfigUsesMeasureError,
    DuplicateDimensionError,
    EmptyKeepSetError,
    InvalidFilterError,
    UnknownDimensionError,
)
from .schema import Cube, DetailTable, DrillRule, FactRow, StarSchema, grand_total

__all__ = [
    "DimensionFilter",
    "EMPTY_FILTER",
    "PivotConfig",
    "PivotReport",
    "DrillConsistency",
    "DrillResult",
    "slice",
    "dice",
    "rollup",
    "pivot",
    "drilldown",
    "query_text",
    "chart_data",
]


@dataclass(frozen=True)
class DimensionFilter:
    """Dice predicate: conjunction across dimensions, disjunction within a
    dimension's value set. An empty filter keeps everything."""

    clauses: Mapping[str, frozenset[str]]

    def __post_init__(self) -> None:
        normalized = {}
        for dim, values in dict(self.clauses).items():
            values = frozenset(values)
            if not values:
                raise InvalidFilterError(f"filter for {dim!r} has an empty value set")
            normalized[dim] = values
        object.__setattr__(self, "clauses", normalized)

    @classmethod
    def from_args(cls, items: Iterable[str]) -> "DimensionFilter":
        """Parse ``Dim=v1,v2`` clause strings (CLI / query-string form).

        Repeated clauses for one dimension union their value sets.
        """
        clauses: dict[str, set[str]] = {}
        for item in items:
            dim, eq, values = item.partition("=")
            if not eq or not dim:
                raise InvalidFilterError(f"expected DIM=VALUE[,VALUE...], got {item!r}")
            parsed = [v for v in values.split(",")]
            if parsed == [""]:
                raise InvalidFilterError(f"filter {item!r} names no values")
            clauses.setdefault(dim, set()).update(parsed)
        return cls({dim: frozenset(vals) for dim, vals in clauses.items()})

    def matches(self, coords: Mapping[str, str]) -> bool:
        return all(coords[dim] in values for dim, values in self.clauses.items())

    def validate(self, schema: StarSchema) -> None:
        for dim in self.clauses:
            if not schema.has_dimension(dim):
                raise UnknownDimensionError(f"unknown dimension {dim!r} in filter")


EMPTY_FILTER = DimensionFilter({})


@dataclass(frozen=True)
class PivotConfig:
    """One horizontal dimension plus an unordered set of vertical dimensions.

    The vertical set is stored sorted (canonical form); the order the caller
    gave is kept as ``display_verticals`` and affects only legend labels.
    Two configs that differ solely in display order compare equal.
    """

    horizontal: str
    verticals: tuple[str, ...] = ()
    display_verticals: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        given = tuple(self.verticals)
        display = tuple(self.display_verticals) or given
        canonical = tuple(sorted(given))
        if len(set(given)) != len(given):
            raise DuplicateDimensionError(f"repeated vertical dimension in {given}")
        if self.horizontal in canonical:
            raise DuplicateDimensionError(
                f"{self.horizontal!r} cannot be both horizontal and vertical"
            )
        if sorted(display) != list(canonical):
            raise DuplicateDimensionError(
                f"display order {display} is not a permutation of {canonical}"
            )
        object.__setattr__(self, "verticals", canonical)
        object.__setattr__(self, "display_verticals", display)

    @property
    def r(self) -> int:
        """Total dimensions drawn: the horizontal plus every vertical."""
        return 1 + len(self.verticals)

    def validate(self, schema: StarSchema) -> None:
        for name in (self.horizontal, *self.verticals):
            if name == schema.measure.name:
                raise ConfigUsesMeasureError(
                    f"measure {name!r} cannot be used as a pivot dimension"
                )
            if not schema.has_dimension(name):
                raise UnknownDimensionError(f"unknown dimension {name!r} in pivot config")


@dataclass(frozen=True)
class PivotReport:
    """Materialized 2-D grid: horizontal values x vertical value-combinations.

    ``cells`` maps ``(row_key, col_values)`` to the summed measure, where
    ``col_values`` is the tuple of vertical values in canonical vertical
    order. Combinations that never occur are absent, not zero. ``col_keys``
    carries the same combinations as dimension->value mappings, and
    ``legend_labels`` concatenates each combination's values in the
    config's display order.
    """

    config: PivotConfig
    row_keys: tuple[str, ...]
    col_keys: tuple[Mapping[str, str], ...]
    cells: Mapping[tuple[str, tuple[str, ...]], int]
    grand_total: int
    legend_labels: tuple[str, ...]

    def cell(self, row_key: str, col_values: tuple[str, ...]) -> int | None:
        return self.cells.get((row_key, col_values))


@dataclass(frozen=True)
class DrillConsistency:
    """Outcome of checking detail cardinality against the fact measure."""

    status: str  # "consistent" | "mismatch" | "not-applicable"
    expected: int | None = None
    actual: int | None = None

    @classmethod
    def consistent(cls) -> "DrillConsistency":
        return cls("consistent")

    @classmethod
    def mismatch(cls, expected: int, actual: int) -> "DrillConsistency":
        return cls("mismatch", expected=expected, actual=actual)

    @classmethod
    def not_applicable(cls) -> "DrillConsistency":
        return cls("not-applicable")


@dataclass(frozen=True)
class DrillResult:
    """Detail rows behind one fact cell, plus the cardinality check."""

    cell_coords: Mapping[str, str]
    detail_rows: tuple[tuple[str, ...], ...]
    cardinality: int
    consistency: DrillConsistency


def slice(cube: Cube, dim: str, value: str) -> Cube:
    """Keep only the rows whose ``dim`` coordinate equals ``value``.

    The schema (and therefore ``n``) is unchanged; slicing an absent value
    yields an empty cube over the same schema.
    """
    return dice(cube, DimensionFilter({dim: frozenset([value])}))


def dice(cube: Cube, where: DimensionFilter) -> Cube:
    """Keep rows satisfying every filter clause. An empty filter is identity."""
    where.validate(cube.schema)
    if not where.clauses:
        return cube
    kept = tuple(row for row in cube.rows if where.matches(row.coords))
    return Cube(schema=cube.schema, rows=kept)


def rollup(cube: Cube, keep: Iterable[str]) -> Cube:
    """Generalize away every dimension not in ``keep``, summing merged rows.

    The result is a cube whose schema has exactly the kept dimensions (in
    the original schema order); output rows are ordered by each group's
    first appearance in the input.
    """
    keep = set(keep)
    if not keep:
        raise EmptyKeepSetError("roll-up must keep at least one dimension")
    for name in keep:
        if not cube.schema.has_dimension(name):
            raise UnknownDimensionError(f"unknown dimension {name!r} in roll-up keep set")

    kept_defs = tuple(d for d in cube.schema.dimensions if d.name in keep)
    kept_names = tuple(d.name for d in kept_defs)
    new_schema = StarSchema(
        dimensions=kept_defs,
        measure=cube.schema.measure,
        value_order={d: v for d, v in cube.schema.value_order.items() if d in keep},
    )

    sums: dict[tuple[str, ...], int] = {}
    for row in cube.rows:
        key = tuple(row.coords[name] for name in kept_names)
        sums[key] = sums.get(key, 0) + row.measure
    rows = tuple(
        FactRow(coords=dict(zip(kept_names, key)), measure=total)
        for key, total in sums.items()
    )
    return Cube(schema=new_schema, rows=rows)


def pivot(cube: Cube, config: PivotConfig, where: DimensionFilter = EMPTY_FILTER) -> PivotReport:
    """Filter, then group by the horizontal and vertical dimensions, summing
    the measure into the 2-D report grid.

    Row keys follow the schema's declared value order (lexicographic when
    none is declared); column combinations are ordered lexicographically in
    canonical vertical order. Every surviving fact row lands in exactly one
    cell, so the cells sum to the filtered cube's grand total.
    """
    config.validate(cube.schema)
    filtered = dice(cube, where)

    cells: dict[tuple[str, tuple[str, ...]], int] = {}
    for row in filtered.rows:
        row_key = row.coords[config.horizontal]
        col_values = tuple(row.coords[v] for v in config.verticals)
        key = (row_key, col_values)
        cells[key] = cells.get(key, 0) + row.measure

    row_keys = tuple(
        cube.schema.sort_values(config.horizontal, {rk for rk, _ in cells})
    )
    col_value_tuples = sorted({cv for _, cv in cells})
    col_keys = tuple(dict(zip(config.verticals, values)) for values in col_value_tuples)
    legend_labels = tuple(_legend_label(config, dict(zip(config.verticals, values)))
                          for values in col_value_tuples)

    return PivotReport(
        config=config,
        row_keys=row_keys,
        col_keys=col_keys,
        cells=cells,
        grand_total=grand_total(filtered),
        legend_labels=legend_labels,
    )


def _legend_label(config: PivotConfig, col_key: Mapping[str, str]) -> str:
    return "".join(col_key[dim] for dim in config.display_verticals)


def drilldown(
    cube: Cube,
    cell: Mapping[str, str],
    detail: DetailTable,
    rules: Sequence[DrillRule],
) -> DrillResult:
    """Fetch the detail rows behind one fact cell.

    A rule applies when its fact dimension appears in the cell; a detail row
    matches when every applicable rule's extracted key equals the cell value
    (after the rule's fact-side trim). With count semantics the summed
    measure of the fact rows at the cell is compared against the detail
    cardinality; with sum semantics the check is not applicable.
    """
    for dim in cell:
        if not cube.schema.has_dimension(dim):
            raise UnknownDimensionError(f"unknown dimension {dim!r} in drill cell")

    applicable = [rule for rule in rules if rule.fact_dimension in cell]
    for rule in applicable:
        detail.column_index(rule.extractor.column)  # fail fast on bad rules

    matching = []
    for row in detail.rows:
        if all(rule.extract(detail, row) == rule.cell_key(cell[rule.fact_dimension])
               for rule in applicable):
            matching.append(row)
    cardinality = len(matching)

    if cube.schema.measure.semantics == "count":
        cell_filter = DimensionFilter({dim: frozenset([value]) for dim, value in cell.items()})
        expected = grand_total(dice(cube, cell_filter))
        if expected < 0:
            consistency = DrillConsistency.not_applicable()
        elif expected == cardinality:
            consistency = DrillConsistency.consistent()
        else:
            consistency = DrillConsistency.mismatch(expected=expected, actual=cardinality)
    else:
        consistency = DrillConsistency.not_applicable()

    return DrillResult(
        cell_coords=dict(cell),
        detail_rows=tuple(matching),
        cardinality=cardinality,
        consistency=consistency,
    )


def query_text(
    config: PivotConfig,
    where: DimensionFilter,
    fact_name: str,
    measure: str,
) -> str:
    """Emit the canonical group-by query for a pivot configuration.

    Shape: ``select d1, ..., dk, sum(m) as amount from fact [where ...]
    group by d1, ..., dk`` with the horizontal first, verticals in canonical
    order, all identifiers lowercased, and the select dimension list
    character-identical to the group-by list. Filter clauses are emitted in
    canonical dimension order as ``dim = 'v'`` or ``dim in ('v1','v2')``.
    """
    dims = ", ".join(d.lower() for d in (config.horizontal, *config.verticals))
    text = f"select {dims}, sum({measure.lower()}) as amount from {fact_name.lower()}"
    if where.clauses:
        parts = []
        for dim in sorted(where.clauses):
            values = sorted(v.replace("'", "''") for v in where.clauses[dim])
            if len(values) == 1:
                parts.append(f"{dim.lower()} = '{values[0]}'")
            else:
                quoted = ",".join(f"'{v}'" for v in values)
                parts.append(f"{dim.lower()} in ({quoted})")
        text += " where " + " and ".join(parts)
    return f"{text} group by {dims}"


def chart_data(report: PivotReport) -> dict:
    """Serialize a report as chart series: one series per vertical
    combination, points aligned to the x axis, missing cells as nulls."""
    col_value_tuples = [tuple(key.values()) for key in report.col_keys]
    return {
        "x_axis": list(report.row_keys),
        "series": [
            {
                "label": label,
                "points": [report.cells.get((row, values)) for row in report.row_keys],
            }
            for values, label in zip(col_value_tuples, report.legend_labels)
        ],
    }
