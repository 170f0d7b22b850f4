"""Weyl-Heisenberg displacement operators, parity and the discrete Wigner function."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple, Union

import numpy as np

from ..errors import (
    InternalInconsistencyError,
    InvalidDimensionError,
    InvalidStateError,
    UnsupportedParityError,
)

STATE_TOL = 1e-10


def check_dimension(d: int) -> int:
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise InvalidDimensionError(f"Dimension must be an integer >= 2, got {d!r}")
    return int(d)


def index_period(d: int) -> int:
    """Period of p -> D_p in each component: 2d for even d, d for odd d."""
    return 2 * d if d % 2 == 0 else d


@dataclass(frozen=True)
class DisplacementIndex:
    """Phase-space label p = (p1, p2), reduced modulo the period of D_p."""

    d: int
    p1: int
    p2: int

    def __post_init__(self):
        check_dimension(self.d)
        period = index_period(self.d)
        object.__setattr__(self, "p1", int(self.p1) % period)
        object.__setattr__(self, "p2", int(self.p2) % period)

    def __add__(self, other: "DisplacementIndex") -> "DisplacementIndex":
        return DisplacementIndex(self.d, self.p1 + other.p1, self.p2 + other.p2)

    def __neg__(self) -> "DisplacementIndex":
        return DisplacementIndex(self.d, -self.p1, -self.p2)

    def scale(self, n: int) -> "DisplacementIndex":
        return DisplacementIndex(self.d, n * self.p1, n * self.p2)

    def symplectic(self, other: "DisplacementIndex") -> int:
        """<p, q> = p2 q1 - p1 q2."""
        return self.p2 * other.p1 - self.p1 * other.p2

    def row_major(self) -> int:
        """Position of (p1 mod d, p2 mod d) in row-major phase-space order."""
        return (self.p1 % self.d) * self.d + (self.p2 % self.d)


IndexLike = Union[DisplacementIndex, Tuple[int, int]]


def as_index(d: int, p: IndexLike) -> DisplacementIndex:
    if isinstance(p, DisplacementIndex):
        if p.d != d:
            raise InvalidDimensionError(f"Index built for d={p.d}, expected d={d}")
        return p
    return DisplacementIndex(d, p[0], p[1])


def phase_space(d: int) -> Iterator[DisplacementIndex]:
    """All of Z_d x Z_d in row-major (p1, p2) order."""
    check_dimension(d)
    for p1 in range(d):
        for p2 in range(d):
            yield DisplacementIndex(d, p1, p2)


@dataclass(frozen=True, eq=False)
class WhOperator:
    """A d x d operator from the Weyl-Heisenberg construction."""

    d: int
    matrix: np.ndarray

    def __matmul__(self, other: "WhOperator") -> "WhOperator":
        return WhOperator(self.d, self.matrix @ other.matrix)

    def dagger(self) -> "WhOperator":
        return WhOperator(self.d, self.matrix.conj().T)

    def unitarity_error(self) -> float:
        eye = np.eye(self.d)
        return float(np.max(np.abs(self.matrix @ self.matrix.conj().T - eye)))

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return self.unitarity_error() <= tol


def tau(d: int) -> complex:
    return np.exp(1j * np.pi * (d + 1) / d)


def tau_power(d: int, k: int) -> complex:
    # tau has order 2d in every dimension
    return np.exp(1j * np.pi * (((d + 1) * k) % (2 * d)) / d)


def _displacement_matrix(d: int, p1: int, p2: int) -> np.ndarray:
    a = np.arange(d)
    m = np.zeros((d, d), dtype=complex)
    m[(a + p1) % d, a] = tau_power(d, p1 * p2) * np.exp(2j * np.pi * ((p2 * a) % d) / d)
    return m


def displacement(d: int, p: IndexLike) -> WhOperator:
    """D_p = tau^{p1 p2} X^{p1} Z^{p2} with X|a> = |a+1> and Z|a> = omega^a |a>."""
    check_dimension(d)
    idx = as_index(d, p)
    return WhOperator(d, _displacement_matrix(d, idx.p1, idx.p2))


@lru_cache(maxsize=32)
def _stack(d: int) -> np.ndarray:
    stack = np.array([_displacement_matrix(d, p.p1, p.p2) for p in phase_space(d)])
    stack.setflags(write=False)
    return stack


def displacement_stack(d: int) -> np.ndarray:
    """All d^2 displacement matrices, shape (d^2, d, d), in row-major order."""
    return _stack(check_dimension(d))


def parity(d: int) -> WhOperator:
    """U_P|a> = |-a>."""
    check_dimension(d)
    a = np.arange(d)
    m = np.zeros((d, d), dtype=complex)
    m[(-a) % d, a] = 1.0
    return WhOperator(d, m)


def require_unit(psi: np.ndarray, tol: float = STATE_TOL) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise InvalidStateError(f"State must be a vector, got shape {psi.shape}")
    deviation = abs(np.linalg.norm(psi) - 1.0)
    if deviation > tol:
        raise InvalidStateError(f"State norm deviates from 1 by {deviation:.3e}")
    return psi


def wigner(psi: np.ndarray, p: IndexLike, tol: float = STATE_TOL) -> float:
    """W(p) = (1/d) <psi| D_{2p} U_P |psi> for odd d."""
    psi = require_unit(psi)
    d = check_dimension(psi.shape[0])
    if d % 2 == 0:
        raise UnsupportedParityError(f"Wigner function requires odd d, got d={d}")
    idx = as_index(d, p).scale(2)
    value = np.vdot(psi, displacement(d, idx).matrix @ parity(d).matrix @ psi) / d
    if abs(value.imag) > tol:
        raise InternalInconsistencyError(
            f"Wigner value at {idx} has imaginary part {value.imag:.3e}"
        )
    return float(value.real)


def wigner_function(psi: np.ndarray) -> np.ndarray:
    """W over Z_d x Z_d as a (d, d) array indexed by (p1, p2)."""
    psi = require_unit(psi)
    d = psi.shape[0]
    values: List[float] = [wigner(psi, p) for p in phase_space(d)]
    return np.array(values).reshape(d, d)
