"""Exception hierarchy shared by the library, kernels and CLI."""

from __future__ import annotations


class DikromaError(Exception):
    """Base class for every error raised by dikroma."""


class ParseError(DikromaError, ValueError):
    """Malformed digraph, coloring or ordering text.

    ``location`` is a human readable position such as ``"line 3"`` or
    ``"byte 5"``.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class ContractError(DikromaError, ValueError):
    """An argument violates an operation's precondition."""


class CapExceeded(DikromaError):
    """The instance is larger than the solver is willing to handle."""


class SolverTimeout(DikromaError):
    """The time budget ran out before the search finished."""


class TraceError(DikromaError):
    """A parsimonious choice trace is not legal for the digraph.

    ``step`` is the 0-based position in the ordering where replay failed.
    """

    def __init__(self, message: str, step: int):
        self.step = step
        super().__init__(f"step {step}: {message}")
