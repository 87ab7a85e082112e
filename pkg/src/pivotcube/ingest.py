"""Manifest-driven loading of fact and detail CSV files into a cube.

The manifest is a JSON document colocated with its data files; relative
paths resolve against the manifest's directory. Data files are header-first
CSV (UTF-8, double-quote quoting); every cell is whitespace-trimmed at
ingest so all later comparisons are exact string equality. An empty string
is a legal category value, but a row that is missing a trailing field is an
error.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import (
    BadMeasureError,
    DuplicateDimensionError,
    EmptyFactFileError,
    HeaderMismatchError,
    MissingFieldError,
    ParseError,
)
from .schema import (
    ColumnExtractor,
    Cube,
    DetailTable,
    DimensionDef,
    DrillRule,
    MeasureDef,
    StarSchema,
    SubstringExtractor,
    build_cube,
    FactRow,
)

__all__ = [
    "DetailSpec",
    "Manifest",
    "load_manifest",
    "load_cube",
    "cube_to_csv",
    "fixture_path",
]


@dataclass(frozen=True)
class DetailSpec:
    """One detail table declaration: where it lives and how to drill into it."""

    name: str
    file: str
    rules: tuple[DrillRule, ...]


@dataclass(frozen=True)
class Manifest:
    """Validated star-schema declaration."""

    base_dir: Path
    fact_file: str
    dimensions: tuple[str, ...]
    measure: str
    semantics: str
    details: tuple[DetailSpec, ...] = ()
    value_order: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def fact_path(self) -> Path:
        return self.base_dir / self.fact_file

    def detail_path(self, spec: DetailSpec) -> Path:
        return self.base_dir / spec.file


def fixture_path(name: str = "student.manifest") -> Path:
    """Path of a shipped fixture file (the student demo cube and its manifest)."""
    return Path(__file__).parent / "fixtures" / name


def load_manifest(path: str | Path) -> Manifest:
    """Parse and validate a manifest file.

    Raises:
        ParseError: unreadable file, invalid JSON, or malformed values.
        MissingFieldError: a required key is absent or empty.
        DuplicateDimensionError: repeated dimension names, or the measure
            named as a dimension.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read manifest {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"manifest {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"manifest {path} must be a JSON object")

    fact = doc.get("fact")
    if not isinstance(fact, dict):
        raise MissingFieldError("manifest is missing the 'fact' section")
    fact_file = fact.get("file")
    if not fact_file:
        raise MissingFieldError("manifest is missing 'fact.file'")
    dimensions = fact.get("dimensions")
    if not dimensions:
        raise MissingFieldError("manifest is missing 'fact.dimensions' (need at least one)")
    if not isinstance(dimensions, list) or not all(isinstance(d, str) for d in dimensions):
        raise ParseError("'fact.dimensions' must be a list of strings")
    measure = fact.get("measure")
    if not measure:
        raise MissingFieldError("manifest is missing 'fact.measure'")
    semantics = fact.get("semantics")
    if not semantics:
        raise MissingFieldError("manifest is missing 'fact.semantics'")
    if semantics not in ("count", "sum"):
        raise ParseError(f"'fact.semantics' must be 'count' or 'sum', got {semantics!r}")
    if len(set(dimensions)) != len(dimensions):
        raise DuplicateDimensionError(f"manifest repeats dimension names: {dimensions}")
    if measure in dimensions:
        raise DuplicateDimensionError(f"measure {measure!r} also listed as a dimension")

    details = []
    for entry in doc.get("details", []):
        if not isinstance(entry, dict) or not entry.get("name") or not entry.get("file"):
            raise MissingFieldError("each detail needs 'name' and 'file'")
        rules = tuple(_parse_rule(rule, dimensions) for rule in entry.get("rules", []))
        details.append(DetailSpec(name=entry["name"], file=entry["file"], rules=rules))

    value_order = {}
    for dim, order in (doc.get("display", {}).get("order", {}) or {}).items():
        if dim not in dimensions:
            raise ParseError(f"display order declared for unknown dimension {dim!r}")
        if not isinstance(order, list):
            raise ParseError(f"display order for {dim!r} must be a list")
        value_order[dim] = tuple(order)

    return Manifest(
        base_dir=path.resolve().parent,
        fact_file=fact_file,
        dimensions=tuple(dimensions),
        measure=measure,
        semantics=semantics,
        details=tuple(details),
        value_order=value_order,
    )


def _parse_rule(raw: object, dimensions: list[str]) -> DrillRule:
    if not isinstance(raw, dict):
        raise ParseError(f"drill rule must be an object, got {raw!r}")
    dim = raw.get("dimension")
    if not dim:
        raise MissingFieldError("drill rule is missing 'dimension'")
    if dim not in dimensions:
        raise ParseError(f"drill rule references unknown dimension {dim!r}")
    extractor_raw = raw.get("extractor")
    if not isinstance(extractor_raw, dict) or len(extractor_raw) != 1:
        raise ParseError(f"drill rule for {dim!r} needs exactly one extractor")
    if "column" in extractor_raw:
        extractor = ColumnExtractor(column=extractor_raw["column"])
    elif "substring" in extractor_raw:
        spec = extractor_raw["substring"]
        if not isinstance(spec, list) or len(spec) != 3:
            raise ParseError(f"substring extractor must be [column, start, length], got {spec!r}")
        extractor = SubstringExtractor(column=spec[0], start=int(spec[1]), length=int(spec[2]))
    else:
        raise ParseError(f"unknown extractor kind {list(extractor_raw)} for {dim!r}")
    take_right = None
    transform = raw.get("transform")
    if transform is not None:
        if not isinstance(transform, dict) or list(transform) != ["take_right"]:
            raise ParseError(f"unknown transform {transform!r} for {dim!r}")
        take_right = int(transform["take_right"])
    return DrillRule(fact_dimension=dim, extractor=extractor, take_right=take_right)


def _read_rows(
    path: Path, empty_error: type[Exception] = ParseError
) -> tuple[list[str], list[tuple[list[str], int]]]:
    """Read a CSV file into (header, [(trimmed row, 1-based line number)]).

    Row width must match the header exactly; trailing fields cannot be
    silently dropped.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read data file {path}: {exc}") from exc
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise empty_error(f"{path} is empty") from None
    header = [h.strip() for h in header]
    rows = []
    for row in reader:
        if not row:  # blank line
            continue
        if len(row) != len(header):
            raise HeaderMismatchError(
                f"{path} line {reader.line_num}: {len(row)} fields, header has {len(header)}"
            )
        rows.append(([cell.strip() for cell in row], reader.line_num))
    return header, rows


def load_cube(manifest: Manifest) -> tuple[Cube, list[DetailTable]]:
    """Load the fact file and every detail table declared by the manifest.

    Fact rows keep file order; the measure must parse as an exact integer.

    Raises:
        HeaderMismatchError: a manifest column is absent from a file header
            (or a row has the wrong width).
        BadMeasureError: a measure cell is not an integer; carries the
            1-based file line number.
        EmptyFactFileError: the fact file has no data rows.
    """
    fact_path = manifest.fact_path()
    header, rows = _read_rows(fact_path, empty_error=EmptyFactFileError)
    missing = [c for c in (*manifest.dimensions, manifest.measure) if c not in header]
    if missing:
        raise HeaderMismatchError(
            f"{fact_path}: header {header} is missing column(s) {', '.join(missing)}"
        )
    if not rows:
        raise EmptyFactFileError(f"{fact_path} has a header but no data rows")

    indexes = {name: header.index(name) for name in manifest.dimensions}
    measure_idx = header.index(manifest.measure)
    fact_rows = []
    for cells, line in rows:
        try:
            measure = int(cells[measure_idx])
        except ValueError:
            raise BadMeasureError(
                f"{fact_path} line {line}: measure {cells[measure_idx]!r} is not an integer",
                line=line,
            ) from None
        coords = {name: cells[idx] for name, idx in indexes.items()}
        fact_rows.append(FactRow(coords=coords, measure=measure))

    schema = StarSchema(
        dimensions=tuple(DimensionDef(name) for name in manifest.dimensions),
        measure=MeasureDef(name=manifest.measure, semantics=manifest.semantics),
        value_order=manifest.value_order,
    )
    cube = build_cube(schema, fact_rows)

    details = []
    for spec in manifest.details:
        detail_path = manifest.detail_path(spec)
        columns, detail_rows = _read_rows(detail_path)
        for rule in spec.rules:
            if rule.extractor.column not in columns:
                raise HeaderMismatchError(
                    f"{detail_path}: drill rule column {rule.extractor.column!r} "
                    f"not in header {columns}"
                )
        details.append(
            DetailTable(
                name=spec.name,
                columns=tuple(columns),
                rows=tuple(tuple(cells) for cells, _ in detail_rows),
            )
        )
    return cube, details


def cube_to_csv(cube: Cube) -> str:
    """Canonical flat export: schema columns in order, rows in cube order.

    Loading the export again yields an identical cube, and identical cubes
    export byte-identically.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    names = cube.schema.dimension_names
    writer.writerow([*names, cube.schema.measure.name])
    for row in cube.rows:
        writer.writerow([*(row.coords[name] for name in names), str(row.measure)])
    return out.getvalue()
