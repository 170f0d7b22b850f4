"""Exception hierarchy for SIC construction, reconstruction and verification."""

from typing import Optional


class SicError(ValueError):
    """Base class for every error raised by siclie."""


class InvalidDimensionError(SicError):
    """Dimension below 2 or otherwise unusable."""


class InvalidStateError(SicError):
    """State vector is not normalized or has the wrong shape."""


class UnsupportedParityError(SicError):
    """Operation defined only for odd dimensions."""


class SearchFailedError(SicError):
    """Fiducial search exhausted its restarts without reaching the target."""

    def __init__(self, message: str, best_residual: Optional[float] = None):
        super().__init__(message)
        self.best_residual = best_residual


class InvalidFileError(SicError):
    """Fiducial, vector-set or tensor file could not be parsed or validated."""


class MissingFiducialError(SicError):
    """No fiducial file supplied and none bundled for the dimension."""


class NotASicError(SicError):
    """Vector set does not have SIC overlaps."""


class InvalidTensorError(SicError):
    """Angle tensor has the wrong shape or symmetry."""


class NotAnAngleTensorError(SicError):
    """Order-3 tensor violates the cocycle consistency condition."""


class NotReconstructibleError(SicError):
    """Gram projector candidate is not a rank-d projector."""


class InternalInconsistencyError(SicError):
    """Checks that should agree disagree; signals a numerical failure."""


class InvalidMatrixError(SicError):
    """Matrix violates a structural precondition such as Hermiticity."""


class NotDecomposableError(SicError):
    """Matrix does not have the Q-Q^T property."""


class NotABasisError(SicError):
    """Operator family is linearly dependent or has the wrong size."""


class InvalidProjectorError(SicError):
    """Input expected to be an orthogonal projector is not one."""
