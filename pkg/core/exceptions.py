"""Error hierarchy shared by the analysis packages and the CLI."""

from __future__ import annotations


class SubcityError(Exception):
    """Base class for every error raised on purpose by subcity."""

    exit_code = 1


class InputError(SubcityError, ValueError):
    """Malformed input files, invalid parameters or mismatched node universes."""

    exit_code = 2


class NumericError(SubcityError, ArithmeticError):
    """A computation could not produce a defined result."""

    exit_code = 1


class ConvergenceError(NumericError):
    """Power iteration did not reach the requested tolerance."""


class UndefinedCorrelationError(NumericError):
    """Pearson correlation requested for a zero-variance vector."""
