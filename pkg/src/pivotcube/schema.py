"""Star-schema data model: dimensions, measure, fact rows, detail tables, cube.

Every type here is immutable after construction; OLAP operations in
:mod:`pivotcube.engine` never mutate a cube, they derive new ones. Dimension
values are opaque category strings even when they look numeric ("5" is a
label, not a number); only the measure is arithmetic, and it is an exact
integer.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadSubstringBoundsError,
    DuplicateDimensionError,
    EmptySchemaError,
    SchemaMismatchError,
    UnknownDetailColumnError,
)

__all__ = [
    "DimensionDef",
    "MeasureDef",
    "StarSchema",
    "FactRow",
    "Cube",
    "DetailTable",
    "ColumnExtractor",
    "SubstringExtractor",
    "DrillRule",
    "build_cube",
    "grand_total",
]


@dataclass(frozen=True, slots=True)
class DimensionDef:
    """One axis of the cube. All values along it are category strings."""

    name: str
    value_kind: str = "category"

    def __post_init__(self) -> None:
        if not self.name:
            raise DuplicateDimensionError("dimension name must be non-empty")


@dataclass(frozen=True, slots=True)
class MeasureDef:
    """The single numeric column.

    ``semantics`` is "count" when each fact value tallies underlying detail
    rows (enables drill-down consistency checks) or "sum" for plain
    additive quantities.
    """

    name: str
    semantics: str = "sum"

    def __post_init__(self) -> None:
        if not self.name:
            raise DuplicateDimensionError("measure name must be non-empty")
        if self.semantics not in ("count", "sum"):
            raise ValueError(f"measure semantics must be 'count' or 'sum', got {self.semantics!r}")


@dataclass(frozen=True)
class StarSchema:
    """Dimension definitions plus the measure definition.

    ``value_order`` optionally declares a display order for a dimension's
    values; declared values sort first (in declared order), anything else
    follows lexicographically.
    """

    dimensions: tuple[DimensionDef, ...]
    measure: MeasureDef
    value_order: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "dimensions", tuple(self.dimensions))
        names = [d.name for d in self.dimensions]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise DuplicateDimensionError(f"duplicate dimension name(s): {', '.join(dupes)}")
        if self.measure.name in names:
            raise DuplicateDimensionError(
                f"measure {self.measure.name!r} is also declared as a dimension"
            )
        order = {dim: tuple(vals) for dim, vals in dict(self.value_order).items()}
        for dim in order:
            if dim not in names:
                raise DuplicateDimensionError(f"value order declared for unknown dimension {dim!r}")
        object.__setattr__(self, "value_order", order)

    @property
    def dimension_names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.dimensions)

    def has_dimension(self, name: str) -> bool:
        return any(d.name == name for d in self.dimensions)

    def sort_values(self, dimension: str, values: Iterable[str]) -> list[str]:
        """Order category values for display: declared order first, then lexicographic."""
        declared = self.value_order.get(dimension, ())
        rank = {v: i for i, v in enumerate(declared)}
        return sorted(values, key=lambda v: (0, rank[v]) if v in rank else (1, v))


@dataclass(frozen=True)
class FactRow:
    """One fact: a full coordinate (one value per dimension) plus the measure."""

    coords: Mapping[str, str]
    measure: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", dict(self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactRow):
            return NotImplemented
        return self.coords == other.coords and self.measure == other.measure


@dataclass(frozen=True)
class Cube:
    """An immutable hypercube: a star schema plus its loaded fact rows.

    ``n`` is the dimension count and never includes the measure column.
    """

    schema: StarSchema
    rows: tuple[FactRow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))

    @property
    def n(self) -> int:
        return len(self.schema.dimensions)


@dataclass(frozen=True)
class DetailTable:
    """Flat detail rows reachable from fact cells via drill-down."""

    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise ValueError(
                    f"detail table {self.name!r} row {i} has {len(row)} values, "
                    f"expected {len(self.columns)}"
                )

    def column_index(self, column: str) -> int:
        try:
            return self.columns.index(column)
        except ValueError:
            raise UnknownDetailColumnError(
                f"detail table {self.name!r} has no column {column!r}"
            ) from None


@dataclass(frozen=True, slots=True)
class ColumnExtractor:
    """Key extractor that reads a whole detail column."""

    column: str


@dataclass(frozen=True, slots=True)
class SubstringExtractor:
    """Key extractor that reads ``length`` characters of a detail column
    starting at 1-based position ``start`` (SQL substr semantics)."""

    column: str
    start: int
    length: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.length < 1:
            raise BadSubstringBoundsError(
                f"substring bounds must be positive, got start={self.start} length={self.length}"
            )


@dataclass(frozen=True, slots=True)
class DrillRule:
    """Declarative join from a fact dimension to a detail-table key.

    The extractor runs on the detail side; ``take_right`` (when set) trims
    the fact-side cell value to its last ``k`` characters before comparing,
    which expresses composite-key joins like matching the last two digits
    of a year against a student-id prefix.
    """

    fact_dimension: str
    extractor: ColumnExtractor | SubstringExtractor
    take_right: int | None = None

    def __post_init__(self) -> None:
        if self.take_right is not None and self.take_right < 1:
            raise BadSubstringBoundsError(
                f"take_right must be positive, got {self.take_right}"
            )

    def extract(self, table: DetailTable, row: Sequence[str]) -> str:
        idx = table.column_index(self.extractor.column)
        value = row[idx]
        if isinstance(self.extractor, SubstringExtractor):
            lo = self.extractor.start - 1
            return value[lo : lo + self.extractor.length]
        return value

    def cell_key(self, cell_value: str) -> str:
        if self.take_right is not None:
            return cell_value[-self.take_right :]
        return cell_value


def build_cube(schema: StarSchema, rows: Iterable[FactRow]) -> Cube:
    """Materialize fact rows into an immutable cube, preserving load order.

    Raises:
        EmptySchemaError: the schema declares zero dimensions.
        SchemaMismatchError: a row misses a dimension or carries an extra one.
    """
    if not schema.dimensions:
        raise EmptySchemaError("a cube needs at least one dimension")
    expected = set(schema.dimension_names)
    out = []
    negatives = 0
    for i, row in enumerate(rows):
        got = set(row.coords)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            problems = []
            if missing:
                problems.append(f"missing {', '.join(missing)}")
            if extra:
                problems.append(f"unexpected {', '.join(extra)}")
            raise SchemaMismatchError(f"fact row {i}: {'; '.join(problems)}")
        if row.measure < 0:
            negatives += 1
        out.append(row)
    if negatives:
        warnings.warn(
            f"loaded {negatives} fact row(s) with a negative measure",
            stacklevel=2,
        )
    return Cube(schema=schema, rows=tuple(out))


def grand_total(cube: Cube) -> int:
    """Exact sum of the measure over all rows (0 for an empty cube)."""
    return sum(row.measure for row in cube.rows)
