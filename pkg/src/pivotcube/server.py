"""HTTP service over one loaded cube.

Requests are served against an immutable snapshot (manifest + cube + detail
tables); ``POST /api/reload`` builds a fresh snapshot from disk and swaps it
in atomically, so in-flight requests finish on the old one. Everything else
is read-only, and identical requests produce byte-identical responses.

Errors use a uniform ``{"error": {"code", "message"}}`` envelope: 4xx for
caller faults, 500 when a reload fails server-side.
"""

from __future__ import annotations

import socket
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import engine
from .combinatorics import enumerate_views, total_view_count
from .errors import CubeError, LoadFailureError, PortInUseError, UnknownDetailTableError
from .ingest import Manifest, load_cube, load_manifest
from .payloads import (
    config_payload,
    cube_payload,
    drill_payload,
    report_payload,
    schema_payload,
    view_count_payload,
)
from .schema import Cube, DetailTable, grand_total

__all__ = ["Snapshot", "load_snapshot", "create_app", "serve"]


@dataclass(frozen=True)
class Snapshot:
    """One immutable view of the loaded data."""

    manifest: Manifest
    cube: Cube
    details: dict[str, DetailTable]


def load_snapshot(manifest_path: str | Path) -> Snapshot:
    manifest = load_manifest(manifest_path)
    cube, details = load_cube(manifest)
    return Snapshot(manifest=manifest, cube=cube, details={d.name: d for d in details})


class ApiPivotRequest(BaseModel):
    horizontal: str
    verticals: list[str] = []
    filter: dict[str, list[str]] = {}
    display_vertical_order: list[str] | None = None


class ApiRollupRequest(BaseModel):
    keep: list[str]
    filter: dict[str, list[str]] = {}


class ApiDrillRequest(BaseModel):
    cell: dict[str, str]
    detail: str | None = None


def _filter_from(mapping: dict[str, list[str]]) -> engine.DimensionFilter:
    return engine.DimensionFilter({dim: frozenset(vals) for dim, vals in mapping.items()})


def _filter_from_params(params: list[str]) -> engine.DimensionFilter:
    return engine.DimensionFilter.from_args(params)


def _config_from(horizontal: str, verticals: list[str],
                 display: list[str] | None) -> engine.PivotConfig:
    return engine.PivotConfig(
        horizontal=horizontal,
        verticals=tuple(verticals),
        display_verticals=tuple(display) if display else (),
    )


def _pick_detail(snapshot: Snapshot, name: str | None) -> tuple[DetailTable, tuple]:
    if name is None:
        if len(snapshot.details) != 1:
            raise UnknownDetailTableError(
                f"specify 'detail'; available: {sorted(snapshot.details)}"
            )
        name = next(iter(snapshot.details))
    if name not in snapshot.details:
        raise UnknownDetailTableError(
            f"no detail table {name!r}; available: {sorted(snapshot.details)}"
        )
    rules = next(s.rules for s in snapshot.manifest.details if s.name == name)
    return snapshot.details[name], rules


def create_app(manifest_path: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    """Build the service around an initial snapshot of ``manifest_path``."""
    try:
        snapshot = load_snapshot(manifest_path)
    except CubeError as exc:
        raise LoadFailureError(f"cannot load {manifest_path}: {exc}") from exc

    app = FastAPI(title="pivotcube", docs_url=None, redoc_url=None)
    app.state.manifest_path = Path(manifest_path)
    app.state.snapshot = snapshot
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(CubeError)
    async def _cube_error(request: Request, exc: CubeError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "validation_error", "message": str(exc.errors())}},
        )

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/schema")
    def schema(request: Request) -> dict:
        snap: Snapshot = request.app.state.snapshot
        return schema_payload(snap.cube, detail_names=sorted(snap.details))

    @app.get("/api/total")
    def total(request: Request,
              filter: Annotated[list[str], Query()] = []) -> dict:
        snap: Snapshot = request.app.state.snapshot
        diced = engine.dice(snap.cube, _filter_from_params(filter))
        return {"grand_total": grand_total(diced), "rows": len(diced.rows)}

    @app.post("/api/pivot")
    def pivot(request: Request, body: ApiPivotRequest) -> dict:
        snap: Snapshot = request.app.state.snapshot
        config = _config_from(body.horizontal, body.verticals, body.display_vertical_order)
        report = engine.pivot(snap.cube, config, _filter_from(body.filter))
        return report_payload(report)

    @app.post("/api/rollup")
    def rollup(request: Request, body: ApiRollupRequest) -> dict:
        snap: Snapshot = request.app.state.snapshot
        diced = engine.dice(snap.cube, _filter_from(body.filter))
        return cube_payload(engine.rollup(diced, body.keep))

    @app.post("/api/drill")
    def drill(request: Request, body: ApiDrillRequest) -> dict:
        snap: Snapshot = request.app.state.snapshot
        detail, rules = _pick_detail(snap, body.detail)
        result = engine.drilldown(snap.cube, body.cell, detail, rules)
        return drill_payload(result, columns=list(detail.columns))

    @app.get("/api/views")
    def views(request: Request, r: int) -> dict:
        snap: Snapshot = request.app.state.snapshot
        configs = enumerate_views(snap.cube.schema.dimension_names, r)
        return {"r": r, "count": len(configs), "views": [config_payload(c) for c in configs]}

    @app.get("/api/views/count")
    def views_count(n: int) -> dict:
        return view_count_payload(total_view_count(n))

    @app.get("/api/chart")
    def chart(request: Request,
              horizontal: str,
              vertical: Annotated[list[str], Query()] = [],
              display: str | None = None,
              filter: Annotated[list[str], Query()] = []) -> dict:
        snap: Snapshot = request.app.state.snapshot
        display_order = [d for d in (display or "").split(",") if d] or None
        config = _config_from(horizontal, vertical, display_order)
        report = engine.pivot(snap.cube, config, _filter_from_params(filter))
        return engine.chart_data(report)

    @app.post("/api/reload")
    def reload(request: Request) -> JSONResponse:
        try:
            fresh = load_snapshot(request.app.state.manifest_path)
        except CubeError as exc:
            return JSONResponse(
                status_code=500,
                content={"error": {"code": LoadFailureError.code, "message": str(exc)}},
            )
        request.app.state.snapshot = fresh  # atomic swap
        return JSONResponse(
            {"reloaded": True, "rows": len(fresh.cube.rows),
             "grand_total": grand_total(fresh.cube)}
        )

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def serve(manifest_path: str | Path, port: int = 8000, host: str = "127.0.0.1",
          ui_dir: str | Path | None = None) -> None:
    """Run the service until interrupted.

    Raises:
        PortInUseError: the port is already bound.
        LoadFailureError: the manifest cannot be loaded at startup.
    """
    import uvicorn

    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as probe:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        try:
            probe.bind((host, port))
        except OSError as exc:
            raise PortInUseError(f"cannot bind {host}:{port}: {exc}") from exc

    app = create_app(manifest_path, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
