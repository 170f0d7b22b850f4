"""Adjoint-representation matrices of a SIC and their spectral structure."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from ..reporting import VerificationReport
from ..tensors import TripleTensors, k_matrix
from ..utils import max_abs, numerical_rank
from .qqt import qqt_error

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AdjointBundle:
    """Per-r matrices stacked along axis 0, each d^2 x d^2."""

    d: int
    T: np.ndarray
    J: np.ndarray
    R: np.ndarray
    Rbar: np.ndarray
    Q: np.ndarray
    e: np.ndarray
    v0: np.ndarray

    @property
    def n(self) -> int:
        return self.d * self.d

    @property
    def QT(self) -> np.ndarray:
        return self.Q.transpose(0, 2, 1)


def e_vectors(d: int) -> np.ndarray:
    """Rows e_r = sqrt((d+1)/(2d)) sum_s K_rs^2 |s>>."""
    return np.sqrt((d + 1) / (2 * d)) * k_matrix(d) ** 2


def v0_vector(d: int) -> np.ndarray:
    return np.full(d * d, 1.0 / d)


def adjoint_bundle(trip: TripleTensors) -> AdjointBundle:
    """(T_r)_st = T_rst, and Q_r = ((d+1)/d) T_r - 2 |e_r>><<e_r|."""
    d = trip.d
    e = e_vectors(d)
    ee = np.einsum("ri,rj->rij", e, e)
    Q = (d + 1) / d * trip.T - 2 * ee
    Rbar = Q + Q.transpose(0, 2, 1)
    return AdjointBundle(
        d=d,
        T=trip.T,
        J=trip.J,
        R=trip.R.astype(complex),
        Rbar=Rbar,
        Q=Q,
        e=e,
        v0=v0_vector(d),
    )


def check_spectral(bundle: AdjointBundle, tol: float = 1e-9) -> VerificationReport:
    """Spectral decompositions of T_r, J_r, R_r in terms of Q_r and e_r."""
    d, n = bundle.d, bundle.n
    T, J, Q, QT = bundle.T, bundle.J, bundle.Q, bundle.QT
    e, v0 = bundle.e, bundle.v0
    ee = np.einsum("ri,rj->rij", e, e)
    J2 = J @ J
    report = VerificationReport()

    report.measure("adjoint.Q_idempotent", max_abs(Q @ Q - Q), tol)
    qqt = max(float(np.linalg.norm(m)) for m in Q @ QT)
    report.measure("adjoint.Q_orthogonal_to_transpose", qqt, tol)
    report.measure("adjoint.J_is_Q_minus_QT", max_abs(J - (Q - QT)), tol)
    report.measure("adjoint.R_decomposition", max_abs(bundle.R - (Q + QT + 4 * ee)), tol)
    report.measure("adjoint.Rbar_is_J_squared", max_abs(bundle.Rbar - J2), tol)
    report.measure("adjoint.Q_from_J", max_abs(Q - 0.5 * (J + J2)), tol)
    report.measure(
        "adjoint.T_from_Q",
        max_abs(T - (d / (d + 1) * Q + 2 * d / (d + 1) * ee)),
        tol,
    )
    report.measure(
        "adjoint.T_from_J", max_abs(T - d / (2 * (d + 1)) * (J + J2 + 4 * ee)), tol
    )
    t2_rhs = d / (d + 1) * T + 2 * d**2 / (d + 1) ** 2 * ee
    report.measure("adjoint.T_squared", max_abs(T @ T - t2_rhs), tol)

    expected = np.zeros(n)
    expected[0] = 2 * d / (d + 1)
    expected[1:d] = d / (d + 1)
    eig_error = max(
        max_abs(np.sort(linalg.eigvalsh(t))[::-1] - expected) for t in T
    )
    report.measure("adjoint.T_eigenvalues", eig_error, tol)

    te = np.einsum("rij,rj->ri", T, e)
    report.measure("adjoint.e_eigenvector", max_abs(te - 2 * d / (d + 1) * e), tol)
    closed = np.sqrt(d / (2 * (d + 1))) * (np.eye(n) + v0[None, :])
    report.measure("adjoint.e_closed_form", max_abs(e - closed), tol)
    report.measure("adjoint.e_normalized", max_abs(np.sum(e * e, axis=1) - 1), tol)

    traces_q = np.einsum("rii->r", Q).real
    report.measure("adjoint.Q_trace", max_abs(traces_q - (d - 1)), tol)
    report.measure("adjoint.T_trace", max_abs(np.einsum("rii->r", T).real - d), tol)
    report.measure(
        "adjoint.Q_annihilates_own_index", max_abs(Q[np.arange(n), :, np.arange(n)]), tol
    )
    report.measure("adjoint.J_annihilates_v0", max_abs(J @ v0), tol)

    report.measure("adjoint.J_qqt", max(qqt_error(j) for j in J), tol)
    rank_gap = max(abs(numerical_rank(j @ j) - 2 * (d - 1)) for j in J)
    report.measure("adjoint.J_qqt_rank", rank_gap, 0.0)
    logger.debug(f"check_spectral d={d}: {report.summary()}")
    return report
