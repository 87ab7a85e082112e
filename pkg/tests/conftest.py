"""Shared fixtures: the student cube (built inline, independent of ingest)
and the shipped fixture files (loaded through ingest)."""

from __future__ import annotations

import pytest

from pivotcube import (
    DimensionDef,
    FactRow,
    MeasureDef,
    StarSchema,
    build_cube,
    fixture_path,
    load_cube,
    load_manifest,
)

# The 13-row student fact table: (Year, Deg, SP, Gen, Amn).
STUDENT_ROWS = [
    ("2000", "5", "11", "p", 11),
    ("2000", "5", "11", "w", 22),
    ("2000", "3", "11", "p", 12),
    ("2000", "3", "11", "w", 13),
    ("2000", "5", "22", "p", 10),
    ("2001", "5", "11", "w", 33),
    ("2001", "5", "11", "p", 44),
    ("2001", "3", "11", "w", 14),
    ("2001", "3", "11", "p", 15),
    ("2002", "5", "11", "p", 55),
    ("2002", "5", "11", "w", 66),
    ("2002", "3", "11", "p", 16),
    ("2002", "3", "11", "w", 17),
]
STUDENT_DIMS = ("Year", "Deg", "SP", "Gen")


def make_student_schema(semantics: str = "count") -> StarSchema:
    return StarSchema(
        dimensions=tuple(DimensionDef(name) for name in STUDENT_DIMS),
        measure=MeasureDef(name="Amn", semantics=semantics),
    )


def make_student_cube(semantics: str = "count"):
    rows = [
        FactRow(coords=dict(zip(STUDENT_DIMS, values)), measure=measure)
        for (*values, measure) in STUDENT_ROWS
    ]
    return build_cube(make_student_schema(semantics), rows)


@pytest.fixture
def student_cube():
    return make_student_cube()


@pytest.fixture
def student_manifest():
    return load_manifest(fixture_path())


@pytest.fixture
def loaded_fixture(student_manifest):
    cube, details = load_cube(student_manifest)
    return cube, details, student_manifest
