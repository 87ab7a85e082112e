"""JSON-ready payload builders shared by the CLI's machine format and the
HTTP service, so the two surfaces emit identical structures."""

from __future__ import annotations

from .combinatorics import ViewCount
from .engine import DrillResult, PivotConfig, PivotReport
from .schema import Cube, grand_total

__all__ = [
    "schema_payload",
    "cube_payload",
    "report_payload",
    "drill_payload",
    "view_count_payload",
    "config_payload",
]


def schema_payload(cube: Cube, detail_names: list[str] | None = None) -> dict:
    payload = {
        "dimensions": list(cube.schema.dimension_names),
        "measure": cube.schema.measure.name,
        "semantics": cube.schema.measure.semantics,
        "n": cube.n,
        "rows": len(cube.rows),
    }
    if detail_names is not None:
        payload["details"] = detail_names
    return payload


def cube_payload(cube: Cube) -> dict:
    names = cube.schema.dimension_names
    return {
        "dimensions": list(names),
        "measure": cube.schema.measure.name,
        "rows": [
            {**{name: row.coords[name] for name in names},
             cube.schema.measure.name: row.measure}
            for row in cube.rows
        ],
        "grand_total": grand_total(cube),
    }


def config_payload(config: PivotConfig) -> dict:
    return {
        "horizontal": config.horizontal,
        "verticals": list(config.verticals),
        "display_verticals": list(config.display_verticals),
    }


def report_payload(report: PivotReport) -> dict:
    """Serialize a pivot report.

    ``cells`` lists one entry per populated cell (col values in canonical
    vertical order); absent combinations are simply not present.
    """
    return {
        "config": config_payload(report.config),
        "row_keys": list(report.row_keys),
        "col_keys": [dict(key) for key in report.col_keys],
        "legend_labels": list(report.legend_labels),
        "cells": [
            {"row": row, "col": list(col), "value": value}
            for (row, col), value in sorted(report.cells.items())
        ],
        "grand_total": report.grand_total,
    }


def drill_payload(result: DrillResult, columns: list[str] | None = None) -> dict:
    consistency: dict = {"status": result.consistency.status}
    if result.consistency.status == "mismatch":
        consistency["expected"] = result.consistency.expected
        consistency["actual"] = result.consistency.actual
    payload = {
        "cell": dict(result.cell_coords),
        "rows": [list(row) for row in result.detail_rows],
        "cardinality": result.cardinality,
        "consistency": consistency,
    }
    if columns is not None:
        payload["columns"] = columns
    return payload


def view_count_payload(count: ViewCount) -> dict:
    return {
        "n": count.n,
        "per_r": list(count.per_r),
        "total": count.total,
        "per_horizontal": count.per_horizontal,
    }
