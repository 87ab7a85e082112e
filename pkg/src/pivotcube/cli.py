"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error. Every data-bearing
subcommand takes ``--manifest`` and ``--format table|machine``; machine
output is JSON and matches the HTTP service's payloads.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import PurePath
from typing import Sequence

from . import engine
from .combinatorics import enumerate_views, total_view_count
from .errors import CubeError, InvalidFilterError, UnknownDetailTableError
from .ingest import Manifest, load_cube, load_manifest
from .payloads import (
    config_payload,
    cube_payload,
    drill_payload,
    report_payload,
    schema_payload,
    view_count_payload,
)
from .schema import grand_total

__all__ = ["cli_dispatch", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _filter_clause(text: str) -> str:
    # validate eagerly so malformed clauses are usage errors, not data errors
    try:
        engine.DimensionFilter.from_args([text])
    except InvalidFilterError as exc:
        raise ValueError(str(exc)) from exc
    return text


def _comma_list(text: str) -> list[str]:
    return [part for part in text.split(",") if part]


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--manifest", help="path to a cube manifest file")
    common.add_argument(
        "--format",
        choices=("table", "machine"),
        default="table",
        help="table for humans, machine for JSON",
    )

    parser = _Parser(prog="pivotcube", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("load", parents=[common], help="validate a manifest and report counts")
    p.set_defaults(func=cmd_load)

    p = sub.add_parser("pivot", parents=[common], help="build a 2-D pivot report")
    _add_config_args(p)
    p.set_defaults(func=cmd_pivot)

    p = sub.add_parser("slice", parents=[common], help="keep rows at one dimension value")
    p.add_argument("--dim", required=True)
    p.add_argument("--value", required=True)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("dice", parents=[common], help="keep rows matching every filter clause")
    p.add_argument("--filter", action="append", default=[], type=_filter_clause,
                   metavar="DIM=V1[,V2...]")
    p.set_defaults(func=cmd_dice)

    p = sub.add_parser("rollup", parents=[common], help="sum away all but the kept dimensions")
    p.add_argument("--keep", action="append", required=True, type=_comma_list,
                   metavar="DIM[,DIM...]")
    p.set_defaults(func=cmd_rollup)

    p = sub.add_parser("drill", parents=[common], help="show detail rows behind a fact cell")
    p.add_argument("--cell", action="append", required=True, type=_filter_clause,
                   metavar="DIM=VALUE")
    p.add_argument("--detail", help="detail table name (defaults to the only one)")
    p.set_defaults(func=cmd_drill)

    p = sub.add_parser("enumerate", parents=[common], help="list every pivot view of r dimensions")
    p.add_argument("--dims", required=True, type=_comma_list, metavar="A,B,C")
    p.add_argument("--r", required=True, type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count pivot views per r and in total")
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("query", parents=[common], help="emit the canonical group-by query text")
    _add_config_args(p)
    p.add_argument("--fact", help="fact table name (defaults to the fact file stem)")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("chart", parents=[common], help="emit chart series for a pivot report")
    _add_config_args(p)
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("serve", parents=[common], help="serve the cube over HTTP")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", help="static directory to serve at / (the pivot explorer build)")
    p.set_defaults(func=cmd_serve)

    return parser


def _add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--horizontal", required=True)
    p.add_argument("--vertical", action="append", default=[], metavar="DIM")
    p.add_argument("--display", type=_comma_list, metavar="DIM[,DIM...]",
                   help="vertical display order for legend labels")
    p.add_argument("--filter", action="append", default=[], type=_filter_clause,
                   metavar="DIM=V1[,V2...]")


def cli_dispatch(argv: Sequence[str] | None = None) -> int:
    """Parse and run one CLI invocation, mapping failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args) or 0
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except CubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


def _require_manifest(args: argparse.Namespace) -> Manifest:
    if not args.manifest:
        raise _UsageError(f"{args.command} requires --manifest")
    return load_manifest(args.manifest)


def _parse_filter(args: argparse.Namespace) -> engine.DimensionFilter:
    return engine.DimensionFilter.from_args(getattr(args, "filter", []))


def _config(args: argparse.Namespace) -> engine.PivotConfig:
    display = tuple(args.display) if args.display else ()
    return engine.PivotConfig(
        horizontal=args.horizontal,
        verticals=tuple(args.vertical),
        display_verticals=display,
    )


def _emit(args: argparse.Namespace, payload: dict, table_lines: list[str]) -> None:
    if args.format == "machine":
        print(json.dumps(payload, indent=2))
    else:
        for line in table_lines:
            print(line)


def _render_grid(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(str(cell)) for cell in col) for col in zip(headers, *rows)] if rows \
        else [len(h) for h in headers]
    def fmt(cells: list[str]) -> str:
        return "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(row) for row in rows)
    return lines


def _cube_lines(cube) -> list[str]:
    names = list(cube.schema.dimension_names)
    rows = [[row.coords[n] for n in names] + [str(row.measure)] for row in cube.rows]
    lines = _render_grid(names + [cube.schema.measure.name], rows)
    lines.append(f"total {grand_total(cube)}")
    return lines


def cmd_load(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, details = load_cube(manifest)
    payload = schema_payload(cube, detail_names=[d.name for d in details])
    payload["grand_total"] = grand_total(cube)
    payload["detail_rows"] = {d.name: len(d.rows) for d in details}
    lines = [
        f"dimensions {cube.n}: {', '.join(cube.schema.dimension_names)}",
        f"measure {cube.schema.measure.name} ({cube.schema.measure.semantics})",
        f"rows {len(cube.rows)}",
        f"grand total {grand_total(cube)}",
    ]
    lines.extend(f"detail {d.name}: {len(d.rows)} rows" for d in details)
    _emit(args, payload, lines)
    return 0


def cmd_pivot(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, _ = load_cube(manifest)
    report = engine.pivot(cube, _config(args), _parse_filter(args))
    headers = [report.config.horizontal] + list(report.legend_labels)
    col_values = [tuple(key.values()) for key in report.col_keys]
    rows = [
        [row_key] + ["" if report.cell(row_key, cv) is None else str(report.cell(row_key, cv))
                     for cv in col_values]
        for row_key in report.row_keys
    ]
    lines = _render_grid(headers, rows)
    lines.append(f"total {report.grand_total}")
    _emit(args, report_payload(report), lines)
    return 0


def cmd_slice(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, _ = load_cube(manifest)
    sliced = engine.slice(cube, args.dim, args.value)
    _emit(args, cube_payload(sliced), _cube_lines(sliced))
    return 0


def cmd_dice(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, _ = load_cube(manifest)
    diced = engine.dice(cube, _parse_filter(args))
    _emit(args, cube_payload(diced), _cube_lines(diced))
    return 0


def cmd_rollup(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, _ = load_cube(manifest)
    keep = [name for chunk in args.keep for name in chunk]
    rolled = engine.rollup(cube, keep)
    _emit(args, cube_payload(rolled), _cube_lines(rolled))
    return 0


def cmd_drill(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, details = load_cube(manifest)
    cell_filter = engine.DimensionFilter.from_args(args.cell)
    cell = {}
    for dim, values in cell_filter.clauses.items():
        if len(values) != 1:
            raise _UsageError(f"--cell needs exactly one value per dimension, got {dim}")
        cell[dim] = next(iter(values))

    by_name = {d.name: d for d in details}
    if args.detail:
        if args.detail not in by_name:
            raise UnknownDetailTableError(
                f"no detail table {args.detail!r}; available: {sorted(by_name) or 'none'}"
            )
        detail = by_name[args.detail]
    elif len(details) == 1:
        detail = details[0]
    else:
        raise _UsageError("--detail is required when the manifest declares several detail tables")
    rules = next(s.rules for s in manifest.details if s.name == detail.name)

    result = engine.drilldown(cube, cell, detail, rules)
    lines = _render_grid(list(detail.columns), [list(r) for r in result.detail_rows])
    lines.append(f"cardinality {result.cardinality}")
    c = result.consistency
    if c.status == "mismatch":
        lines.append(f"consistency mismatch expected={c.expected} actual={c.actual}")
    elif c.status == "not-applicable":
        lines.append("consistency n/a")
    else:
        lines.append("consistency consistent")
    _emit(args, drill_payload(result, columns=list(detail.columns)), lines)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    views = enumerate_views(args.dims, args.r)
    payload = {"r": args.r, "count": len(views), "views": [config_payload(v) for v in views]}
    lines = [
        v.horizontal + (f"|{','.join(v.verticals)}" if v.verticals else "")
        for v in views
    ]
    _emit(args, payload, lines)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    count = total_view_count(args.n)
    lines = [
        " ".join(str(c) for c in count.per_r),
        f"total {count.total}",
        f"per-horizontal {count.per_horizontal}",
    ]
    _emit(args, view_count_payload(count), lines)
    return 0


def cmd_query(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, _ = load_cube(manifest)
    config = _config(args)
    config.validate(cube.schema)
    fact_name = args.fact or PurePath(manifest.fact_file).stem
    text = engine.query_text(config, _parse_filter(args), fact_name, cube.schema.measure.name)
    _emit(args, {"query": text}, [text])
    return 0


def cmd_chart(args: argparse.Namespace) -> int:
    manifest = _require_manifest(args)
    cube, _ = load_cube(manifest)
    report = engine.pivot(cube, _config(args), _parse_filter(args))
    data = engine.chart_data(report)
    print(json.dumps(data, indent=2))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve  # deferred: pulls in fastapi/uvicorn

    if not args.manifest:
        raise _UsageError("serve requires --manifest")
    serve(args.manifest, port=args.port, host=args.host, ui_dir=args.ui)
    return 0


if __name__ == "__main__":
    main()
