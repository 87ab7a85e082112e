"""In-memory star-schema OLAP micro-engine.

Load a fact table into an immutable cube, then slice, dice, roll up, drill
down, and pivot it into 2-D reports; enumerate and count every distinct
pivot view of the cube with exact combinatorics, cross-checked by a
brute-force oracle. Exposed as a library, a CLI (``pivotcube``), and an
HTTP service.
"""

from .combinatorics import (
    ViewCount,
    brute_force_count,
    choose,
    enumerate_views,
    factorial,
    total_view_count,
    view_count,
)
from .engine import (
    EMPTY_FILTER,
    DimensionFilter,
    DrillConsistency,
    DrillResult,
    PivotConfig,
    PivotReport,
    chart_data,
    dice,
    drilldown,
    pivot,
    query_text,
    rollup,
)
from .engine import slice as slice_cube
from .errors import CubeError
from .ingest import Manifest, cube_to_csv, fixture_path, load_cube, load_manifest
from .schema import (
    ColumnExtractor,
    Cube,
    DetailTable,
    DimensionDef,
    DrillRule,
    FactRow,
    MeasureDef,
    StarSchema,
    SubstringExtractor,
    build_cube,
    grand_total,
)

__version__ = "0.1.0"

__all__ = [
    "ViewCount",
    "brute_force_count",
    "choose",
    "enumerate_views",
    "factorial",
    "total_view_count",
    "view_count",
    "EMPTY_FILTER",
    "DimensionFilter",
    "DrillConsistency",
    "DrillResult",
    "PivotConfig",
    "PivotReport",
    "chart_data",
    "dice",
    "drilldown",
    "pivot",
    "query_text",
    "rollup",
    "slice_cube",
    "CubeError",
    "Manifest",
    "cube_to_csv",
    "fixture_path",
    "load_cube",
    "load_manifest",
    "ColumnExtractor",
    "Cube",
    "DetailTable",
    "DimensionDef",
    "DrillRule",
    "FactRow",
    "MeasureDef",
    "StarSchema",
    "SubstringExtractor",
    "build_cube",
    "grand_total",
    "__version__",
]
