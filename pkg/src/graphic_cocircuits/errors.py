"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphicCocircuitsError(Exception):
    """Base class for all package errors."""


class FormatError(GraphicCocircuitsError, ValueError):
    """Malformed matrix/graph text input."""


class BoundExceeded(GraphicCocircuitsError):
    """An exhaustive search was asked to run past its configured size bound."""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.what = what
        self.size = size
        self.bound = bound


class UnknownLabel(GraphicCocircuitsError, KeyError):
    def __init__(self, label):
        super().__init__(f"unknown label {label!r}")
        self.label = label

    def __str__(self) -> str:
        return self.args[0]


class RankDeficient(GraphicCocircuitsError, ValueError):
    """standard_form needs a matrix of full row rank."""


class PreconditionError(GraphicCocircuitsError, ValueError):
    """Input violates the stated promise of an operation."""


class NotGraphic(PreconditionError):
    pass


class NotThreeConnected(PreconditionError):
    pass


class AxiomViolation(GraphicCocircuitsError):
    """A circuit family that should be a matroid failed the circuit axioms."""
