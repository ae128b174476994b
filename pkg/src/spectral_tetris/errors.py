"""Exception types shared across the package."""

from __future__ import annotations


class SpectralTetrisError(Exception):
    """Base class for all errors raised by this package."""


class NotSortedError(SpectralTetrisError):
    """A sequence required to be sorted was not."""


class TraceMismatchError(SpectralTetrisError):
    """Sum of squared norms does not equal the sum of eigenvalues."""


class BlockInfeasibleError(SpectralTetrisError):
    """No 2x2 block with the requested row/column masses exists.

    ``condition`` records which existence condition failed:
    "positive-mass" (the first-row mass must satisfy 0 < x <= a1+a2) or
    "same-side" (both column masses must lie on the same side of x).
    """

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class ConstructionStuckError(SpectralTetrisError):
    """The constructor cannot proceed; the input ordering is not ready.

    ``row``/``col`` are the 0-based cursor position, ``reason`` one of
    "block-infeasible", "row-overfull", "missing-column", "missing-row",
    "leftover-columns".
    """

    def __init__(self, message: str, row: int, col: int, reason: str):
        super().__init__(message)
        self.row = row
        self.col = col
        self.reason = reason


class InfeasibleError(SpectralTetrisError):
    """No unit-norm tight frame with these parameters is constructible."""


class InvalidDimsError(SpectralTetrisError):
    """Vector count / dimension pair outside the valid range."""


class OutOfRangeError(SpectralTetrisError):
    """Redundancy outside the open interval (1, 2)."""


class DegenerateSpectrumError(SpectralTetrisError):
    """Equal-norm construction needs at least two eigenvalues."""


class FactorizationIncompleteError(SpectralTetrisError):
    """Square-free extraction hit a cofactor above the factor bound."""

    def __init__(self, message: str, cofactor: int):
        super().__init__(message)
        self.cofactor = cofactor


class ZeroRowError(SpectralTetrisError):
    """A synthesis matrix row is identically zero; not a frame."""
