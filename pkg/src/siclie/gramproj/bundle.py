"""Gram projectors of Weyl-Heisenberg orbits and the P-P^T property."""

import logging
from dataclasses import dataclass

import numpy as np

from ..adjoint import qqt_error
from ..errors import InternalInconsistencyError, UnsupportedParityError
from ..reporting import VerificationReport
from ..sic import Fiducial
from ..utils import max_abs, numerical_rank
from ..weyl import displacement_stack, phase_space, tau_power, wigner

logger = logging.getLogger(__name__)

FACTORIZATION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class WhGramBundle:
    """P_pq = <psi_p|psi_q>/d over the orbit psi_p = D_p psi, rows in row-major order."""

    d: int
    P: np.ndarray
    h: np.ndarray
    h_imag: float
    Pbar: np.ndarray
    J_P: np.ndarray

    @property
    def n(self) -> int:
        return self.d * self.d


def h_vector(psi: np.ndarray) -> np.ndarray:
    """<<p|h>> = d^{-1/2} sum_a tau^{p1 p2} omega^{p2 a} <psi|-a-p1><a|psi>."""
    d = psi.shape[0]
    a = np.arange(d)
    h = np.empty(d * d, dtype=complex)
    for p in phase_space(d):
        terms = np.exp(2j * np.pi * ((p.p2 * a) % d) / d)
        terms = terms * psi[(-a - p.p1) % d].conj() * psi
        h[p.row_major()] = tau_power(d, p.p1 * p.p2) * terms.sum()
    return h / np.sqrt(d)


def wh_gram_bundle(
    fid: Fiducial, strict: bool = True, tol: float = FACTORIZATION_TOL
) -> WhGramBundle:
    """Build P, h, Pbar = P - h h^dag and J_P = P - P^T.

    With strict=False an unnormalized fiducial is accepted so that check_ppt
    can report the failure.
    """
    if strict:
        fid.require_normalized()
    d = fid.d
    orbit = displacement_stack(d) @ fid.components
    P = orbit.conj() @ orbit.T / d
    h = h_vector(fid.components)

    mismatch = max_abs(P @ P.T - np.outer(h, h.conj()))
    if mismatch > tol:
        raise InternalInconsistencyError(
            f"P P^T differs from h h^dag by {mismatch:.3e} at d={d}"
        )
    h_imag = max_abs(h.imag)
    h = h.real
    Pbar = P - np.outer(h, h)
    logger.debug(f"Gram projector bundle d={d}: |Im h| = {h_imag:.3e}")
    return WhGramBundle(d=d, P=P, h=h, h_imag=h_imag, Pbar=Pbar, J_P=P - P.T)


def check_ppt(bundle: WhGramBundle, tol: float = 1e-9) -> VerificationReport:
    d, P, Pbar, J = bundle.d, bundle.P, bundle.Pbar, bundle.J_P
    J2 = J @ J
    report = VerificationReport()

    report.measure("gramproj.P_idempotent", max_abs(P @ P - P), tol)
    report.measure("gramproj.P_trace", abs(np.trace(P) - d), tol)
    report.measure("gramproj.h_unit", abs(np.linalg.norm(bundle.h) - 1), tol)
    report.measure("gramproj.h_real", bundle.h_imag, tol)
    report.measure(
        "gramproj.PPT_factorization", max_abs(P @ P.T - np.outer(bundle.h, bundle.h)), tol
    )
    report.measure("gramproj.Pbar_idempotent", max_abs(Pbar @ Pbar - Pbar), tol)
    report.measure("gramproj.Pbar_rank", abs(numerical_rank(Pbar) - (d - 1)), 0.0)
    report.measure(
        "gramproj.Pbar_orthogonal_transpose", float(np.linalg.norm(Pbar @ Pbar.T)), tol
    )
    report.measure("gramproj.J_imaginary", max_abs(J.real), tol)
    report.measure(
        "gramproj.J_squared_projector",
        max(max_abs(J2.imag), max_abs(J2 @ J2 - J2)),
        tol,
    )
    report.measure("gramproj.J_squared_rank", abs(numerical_rank(J2) - (2 * d - 2)), 0.0)
    report.measure("gramproj.Pbar_qqt", qqt_error(Pbar - Pbar.T), tol)
    return report


def wigner_h_relation(fid: Fiducial, tol: float = 1e-9) -> VerificationReport:
    """<<p|h>> = sqrt(d) W(-2^{-1} p), with 2^{-1} = (d+1)/2 modulo odd d."""
    d = fid.d
    if d % 2 == 0:
        raise UnsupportedParityError(f"2 has no inverse modulo even d={d}")
    psi = fid.require_normalized().components
    h = h_vector(psi)
    half = (d + 1) // 2
    predicted = np.empty(d * d)
    for p in phase_space(d):
        predicted[p.row_major()] = np.sqrt(d) * wigner(psi, p.scale(-half))
    report = VerificationReport()
    report.measure("gramproj.wigner_h", max_abs(h - predicted), tol)
    return report
