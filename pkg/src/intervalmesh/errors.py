"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "InvalidParameterError",
    "DisconnectedGraphError",
    "UnknownVertexError",
    "InvalidColoringError",
    "NotRegularError",
    "CannotStepDownError",
    "ConstructionError",
    "NonBipartiteError",
    "SchemaError",
    "BudgetExceededError",
    "NotIntervalColorableError",
]


class InvalidParameterError(ValueError):
    """A family parameter is out of its admissible range."""


class DisconnectedGraphError(ValueError):
    """The graph has no finite diameter."""


class UnknownVertexError(ValueError):
    """A vertex does not belong to the graph."""


class InvalidColoringError(ValueError):
    """A coloring is structurally unusable for the requested operation."""


class NotRegularError(ValueError):
    """The operation requires a regular graph."""


class CannotStepDownError(ValueError):
    """The palette is already at the minimum the recoloring supports."""


class ConstructionError(RuntimeError):
    """A closed-form construction failed its own self-check."""


class NonBipartiteError(ValueError):
    """The operation requires a bipartite graph."""


class SchemaError(ValueError):
    """A JSON document does not match the expected schema."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search ran out of its configured budget."""


class NotIntervalColorableError(RuntimeError):
    """Exhaustive search ruled out every candidate palette size."""
