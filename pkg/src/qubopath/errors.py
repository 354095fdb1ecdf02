"""Exception types shared across the package."""

from __future__ import annotations


class QubopathError(Exception):
    """Base class for all errors raised by this package."""


class MissingVariableError(QubopathError):
    """A polynomial was evaluated with an assignment that does not cover all variables."""


class MissingEdgeError(QubopathError):
    """A path traverses a vertex pair with no edge between them."""


class EncodingRangeError(QubopathError):
    """A position or vertex index lies outside the encoding layout."""


class PathLengthError(QubopathError):
    """A path passed for encoding does not have exactly the configured length."""


class DegreeError(QubopathError):
    """An operation that requires a quadratic polynomial received a higher-degree one."""


class RegistryCapError(QubopathError):
    """Compilation would exceed the configured variable cap."""


class BruteForceCapError(QubopathError):
    """The problem has too many variables for exhaustive search."""


class SpecError(QubopathError):
    """A problem definition failed to parse or validate.

    Carries the list of diagnostics that caused the failure.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics) or "invalid problem spec")
