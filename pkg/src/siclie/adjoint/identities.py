"""Hilbert-Schmidt inner products and sums of the adjoint matrices."""

import logging

import numpy as np

from ..reporting import VerificationReport
from ..utils import max_abs
from .bundle import AdjointBundle

logger = logging.getLogger(__name__)


def _pairwise_traces(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """M_rs = Tr(A_r B_s) for stacks of square matrices."""
    return np.einsum("rab,sba->rs", a, b)


def hs_identities(bundle: AdjointBundle, tol: float = 1e-9) -> VerificationReport:
    d, n = bundle.d, bundle.n
    Q, QT, J, Rbar = bundle.Q, bundle.QT, bundle.J, bundle.Rbar
    delta = np.eye(n)
    report = VerificationReport()

    expected = (d**3 * delta + d**2 - d - 1) / (d + 1) ** 2
    report.measure("adjoint.hs.QQ", max_abs(_pairwise_traces(Q, Q) - expected), tol)

    expected = d**2 * (1 - delta) / (d + 1) ** 2
    report.measure("adjoint.hs.QQT", max_abs(_pairwise_traces(Q, QT) - expected), tol)

    expected = 2 * (d**2 * delta - 1) / (d + 1)
    report.measure("adjoint.hs.JJ", max_abs(_pairwise_traces(J, J) - expected), tol)

    expected = 2 * (d - 1) * (d**2 * delta + 2 * d + 1) / (d + 1) ** 2
    report.measure(
        "adjoint.hs.RbarRbar", max_abs(_pairwise_traces(Rbar, Rbar) - expected), tol
    )
    report.measure("adjoint.hs.JRbar", max_abs(_pairwise_traces(J, Rbar)), tol)
    logger.debug(f"hs_identities d={d}: {report.summary()}")
    return report


def sum_identities(bundle: AdjointBundle, tol: float = 1e-9) -> VerificationReport:
    """v0 spans the common kernel; the sums are multiples of its complement."""
    d, n = bundle.d, bundle.n
    v0 = bundle.v0
    complement = np.eye(n) - np.outer(v0, v0)
    report = VerificationReport()

    report.measure("adjoint.sum.Q_annihilates_v0", max_abs(bundle.Q @ v0), tol)
    report.measure("adjoint.sum.Rbar_annihilates_v0", max_abs(bundle.Rbar @ v0), tol)
    q_sum = bundle.Q.sum(axis=0)
    report.measure(
        "adjoint.sum.Q", max_abs(q_sum - d**2 / (d + 1) * complement), tol
    )
    report.measure(
        "adjoint.sum.Q_trace", abs(np.trace(q_sum) - d**2 * (d - 1)), tol
    )
    report.measure("adjoint.sum.J", max_abs(bundle.J.sum(axis=0)), tol)
    report.measure(
        "adjoint.sum.Rbar",
        max_abs(bundle.Rbar.sum(axis=0) - 2 * d**2 / (d + 1) * complement),
        tol,
    )
    return report
