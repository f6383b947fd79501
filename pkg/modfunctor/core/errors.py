from typing import Optional


class DataFormatWarning(Warning):
    """
    Warnings given by modfunctor when a document is not formatted as expected, though not fatally.
    """
    pass


class AmbiguityWarning(RuntimeWarning):
    """Raised when derived data is determined only up to a choice that could not be resolved."""


class ModularFunctorError(Exception):
    pass


class LabelError(ModularFunctorError, KeyError):
    """Raised when a label is looked up that is not in the label set."""

    def __init__(self, label: str) -> None:
        super().__init__(f"label not in Λ: {label!r}")
        self.label = label

    def __str__(self) -> str:
        return self.args[0]


class DocumentError(ModularFunctorError, ValueError):
    """Raised when a basic-data document cannot be parsed or has the wrong shape."""

    def __init__(
            self, message: str, line: Optional[int]=None, column: Optional[int]=None
    ) -> None:
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ShapeError(DocumentError):
    """Raised when a tensor's shape disagrees with the dimension table."""


class StructureError(DocumentError):
    """Raised when the label set, dimension table or twists violate the axioms."""


class RelationError(ModularFunctorError):
    """Raised when a scalar that the relations force to be nonzero vanishes, or a matrix that must
    be invertible is singular."""


class CalibrationError(RelationError):
    """Raised when two independent computations of the same operator disagree."""


class ReconstructionError(RelationError):
    """Raised when S cannot be recovered from genus-zero data within tolerance."""


class EigenvectorExtractionError(RelationError):
    """Raised when the fusion matrices do not have a common eigenbasis."""


class GeneratorError(ModularFunctorError):
    """Raised when a built-in theory generator fails to produce data passing the relation
    suite."""
