"""Exception hierarchy shared by the graph, homology and diagram layers."""
from typing import Optional


class HomologyError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(HomologyError, ValueError):
    """Malformed edge list, graph expression or PD code."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class GraphBuildError(HomologyError, ValueError):
    """A constructor or gluing operation was given parameters it cannot honour."""


class ResourceLimitError(HomologyError, RuntimeError):
    """An input exceeds a configured edge, crossing or enumeration ceiling."""


class IntegrityError(HomologyError, ArithmeticError):
    """An internal consistency check failed (d∘d ≠ 0, inconsistent polynomial, ...)."""


class HypothesisError(HomologyError, ValueError):
    """A closed form was evaluated outside the hypotheses it is stated under."""


class UsageError(HomologyError, ValueError):
    """The run configuration is invalid."""
