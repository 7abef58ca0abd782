"""Exception hierarchy shared by all modules."""


class TematrixError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(TematrixError):
    """Operand shapes are incompatible with the requested operation."""


class SingularMatrixError(TematrixError):
    """A matrix required to be invertible is singular."""


class PivotError(TematrixError):
    """The addressed pivot entry is zero or out of range."""


class DomainError(TematrixError):
    """Entries are outside the domain an operation requires (e.g. non-integer)."""


class RankError(TematrixError):
    """Rows required to be linearly independent are dependent."""


class MembershipError(TematrixError):
    """A vector lies outside the cone it was asserted to belong to."""


class ClassificationError(TematrixError):
    """Input does not belong to any supported brick class."""


class DecompositionError(TematrixError):
    """Input is not a te-set; carries a witness subset when available.

    ``witness`` is a tuple of row indices whose matrix is independent but not
    equimodular (or an offending transversal set for mutual-tu failures).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WrongCaseError(TematrixError):
    """A thick-interlace construction was called on the other Hilbert case."""


class ConstructionFailureError(TematrixError):
    """A triangulation search exhausted its budget without a verified result."""


class UnsupportedSizeError(TematrixError):
    """The operation refuses this size by design (e.g. thick bricks above six)."""


class MatrixFileError(TematrixError):
    """A matrix file failed to parse; carries line/column diagnostics."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
