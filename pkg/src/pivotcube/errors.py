"""Exception hierarchy for the pivotcube engine.

Every error carries a stable ``code`` string so the CLI and the HTTP
service can map failures onto exit codes and error envelopes without
string-matching messages.
"""

from __future__ import annotations

__all__ = [
    "CubeError",
    "EmptySchemaError",
    "SchemaMismatchError",
    "DuplicateDimensionError",
    "UnknownDimensionError",
    "EmptyKeepSetError",
    "ConfigUsesMeasureError",
    "InvalidFilterError",
    "UnknownDetailColumnError",
    "UnknownDetailTableError",
    "BadSubstringBoundsError",
    "OutOfRangeError",
    "ParseError",
    "MissingFieldError",
    "HeaderMismatchError",
    "BadMeasureError",
    "EmptyFactFileError",
    "PortInUseError",
    "LoadFailureError",
]


class CubeError(Exception):
    """Base class for all pivotcube errors."""

    code = "cube_error"


class EmptySchemaError(CubeError):
    """A star schema must declare at least one dimension."""

    code = "empty_schema"


class SchemaMismatchError(CubeError):
    """A fact row misses or adds a dimension coordinate."""

    code = "schema_mismatch"


class DuplicateDimensionError(CubeError):
    """Dimension names must be unique and distinct from the measure."""

    code = "duplicate_dimension"


class UnknownDimensionError(CubeError):
    """A referenced dimension does not exist in the schema."""

    code = "unknown_dimension"


class EmptyKeepSetError(CubeError):
    """Roll-up must keep at least one dimension."""

    code = "empty_keep_set"


class ConfigUsesMeasureError(CubeError):
    """The measure can never act as a horizontal or vertical dimension."""

    code = "config_uses_measure"


class InvalidFilterError(CubeError):
    """A dice filter clause is malformed (e.g. an empty value set)."""

    code = "invalid_filter"


class UnknownDetailColumnError(CubeError):
    """A drill rule references a column the detail table does not have."""

    code = "unknown_detail_column"


class UnknownDetailTableError(CubeError):
    """The named detail table is not loaded."""

    code = "unknown_detail_table"


class BadSubstringBoundsError(CubeError):
    """Substring extractor bounds must be positive (1-based start)."""

    code = "bad_substring_bounds"


class OutOfRangeError(CubeError):
    """An argument is outside the supported exact-integer range."""

    code = "out_of_range"


class ParseError(CubeError):
    """A manifest or data file could not be read or parsed."""

    code = "parse_error"


class MissingFieldError(CubeError):
    """A required manifest field is absent or empty."""

    code = "missing_field"


class HeaderMismatchError(CubeError):
    """A data file header (or a row's width) does not satisfy the manifest."""

    code = "header_mismatch"


class BadMeasureError(CubeError):
    """A fact row's measure is not an exact integer.

    ``line`` is the 1-based physical line number in the fact file
    (the header is line 1).
    """

    code = "bad_measure"

    def __init__(self, message: str, line: int):
        super().__init__(message)
        self.line = line


class EmptyFactFileError(CubeError):
    """The fact file contains a header but no data rows."""

    code = "empty_fact_file"


class PortInUseError(CubeError):
    """The requested TCP port is already bound."""

    code = "port_in_use"


class LoadFailureError(CubeError):
    """The service could not load (or reload) its cube snapshot."""

    code = "load_failure"
