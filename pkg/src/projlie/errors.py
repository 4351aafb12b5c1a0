"""Shared exception types.

CLI exit codes: ValidationError and plain ValueError exit 1, CapExceeded and
TruncationError exit 2.
"""


class CapExceeded(RuntimeError):
    """An enumeration cap or size cap would be exceeded."""


class TruncationError(ValueError):
    """An operation needs data above the stored weight truncation."""


class ValidationError(ValueError):
    """Structured input failed an axiom or schema check."""


class UnsupportedCategory(ValueError):
    """The generic engine cannot handle this category (e.g. not tensor-closed)."""
