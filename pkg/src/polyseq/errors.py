"""Exception types for polyseq.

Everything raised on purpose derives from PolyseqError so callers (and the
CLI) can distinguish mathematical/window failures from plain bugs.
"""

from __future__ import annotations


class PolyseqError(Exception):
    """Base class for all polyseq domain errors."""


class SchemaError(PolyseqError):
    """Malformed JSON payload: wrong keys, wrong shapes, bad rational strings."""


class StructureError(PolyseqError):
    """A matrix does not have the structure an operation requires."""


class NotInvertibleError(PolyseqError):
    """Triangular inversion hit a zero pivot."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"zero diagonal entry at row {row}; matrix is not invertible")


class WindowError(PolyseqError):
    """The truncation is too small for the requested output to be exact."""

    def __init__(self, required: int, actual: int, what: str = "operation"):
        self.required = required
        self.actual = actual
        super().__init__(
            f"{what} needs truncation size T >= {required}, got T = {actual}"
        )


class SpecTooShortError(PolyseqError):
    """Coefficient lists cannot fill the requested number of rows."""

    def __init__(self, what: str, required: int, actual: int):
        self.required = required
        self.actual = actual
        super().__init__(f"{what} needs at least {required} entries, got {actual}")


class ZeroAlphaError(PolyseqError):
    """A subdiagonal recurrence coefficient alpha_k is zero where it must not be."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"alpha_{index} is zero; sequence is not an orthogonal one")


class InsufficientMomentsError(PolyseqError):
    """A moment list is too short for the polynomial handed to the functional."""


class BasisError(PolyseqError):
    """A polynomial basis is not graded monic or is too short for the target."""


class FamilyError(PolyseqError):
    """Unknown family name, zero scale parameter, or formula not defined for family."""


class PropertyViolationError(PolyseqError):
    """An internal structural identity failed; indicates a bug, never a fallback."""


class MismatchError(PolyseqError):
    """Two computation routes that must agree produced different values."""

    def __init__(self, where: tuple, detail: str = ""):
        self.where = where
        msg = f"cross-method mismatch at {where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
