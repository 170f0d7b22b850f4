"""Matrices of the form A = P - P^T with P orthogonal to its own transpose."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from ..errors import InvalidMatrixError, NotDecomposableError
from ..utils import hermiticity_error, max_abs, numerical_rank, unit_eigenbasis

QQT_TOL = 1e-8

SIGMA_Y = np.array([[0.0, -1j], [1j, 0.0]])


def qqt_error(a: np.ndarray) -> float:
    """max(|Re A|, |A^4 - A^2|): zero exactly for Q-Q^T matrices."""
    a2 = a @ a
    return max(max_abs(a.real), max_abs(a2 @ a2 - a2))


def is_qqt(
    a: np.ndarray, rank_target: Optional[int] = None, tol: float = QQT_TOL
) -> bool:
    """A Hermitian A is P - P^T iff it is pure imaginary and A^2 is a projector."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or hermiticity_error(a) > tol:
        raise InvalidMatrixError("is_qqt requires a square Hermitian matrix")
    if qqt_error(a) >= tol:
        return False
    if rank_target is not None and numerical_rank(a @ a) != 2 * rank_target:
        return False
    return True


def qqt_projector(a: np.ndarray) -> np.ndarray:
    """The +1 spectral projector P = (A + A^2)/2."""
    return 0.5 * (a + a @ a)


@dataclass(frozen=True, eq=False)
class QqtCanonicalForm:
    """A = S D S^T with S real orthogonal and D = diag(sigma_y x n, 0, ..., 0)."""

    S: np.ndarray
    n: int

    @property
    def D(self) -> np.ndarray:
        size = self.S.shape[0]
        D = np.zeros((size, size), dtype=complex)
        for k in range(self.n):
            D[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = SIGMA_Y
        return D

    def reconstruct(self) -> np.ndarray:
        return self.S @ self.D @ self.S.T


def qqt_canonical_form(a: np.ndarray, tol: float = QQT_TOL) -> QqtCanonicalForm:
    """Real orthogonal frame built from the +1 eigenspace of A.

    For each basis vector a_k of that eigenspace the pair sqrt(2) Re a_k,
    sqrt(2) Im a_k is real and orthonormal, so that a_k = (b + i b')/sqrt(2);
    the remaining columns complete the frame to a real orthogonal S.
    """
    a = np.asarray(a)
    if not is_qqt(a, tol=tol):
        raise NotDecomposableError("Matrix does not have the Q-Q^T property")
    basis = unit_eigenbasis(qqt_projector(a))
    n = basis.shape[1]
    columns = []
    for k in range(n):
        columns.append(np.sqrt(2) * basis[:, k].real)
        columns.append(np.sqrt(2) * basis[:, k].imag)
    size = a.shape[0]
    b = np.column_stack(columns) if columns else np.zeros((size, 0))
    rest = linalg.null_space(b.T) if n else np.eye(size)
    S = np.hstack([b, rest])
    return QqtCanonicalForm(S=S, n=n)
