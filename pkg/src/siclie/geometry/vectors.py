"""The f, g and e-bar vectors attached to pairs of adjoint projectors."""

import logging
from dataclasses import dataclass

import numpy as np

from ..adjoint import AdjointBundle
from ..reporting import VerificationReport
from ..utils import max_abs

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GeomVectors:
    """Vectors indexed [r, s, :]; the r == s slices are exactly zero.

    f[r, s] = i sqrt(d+1) Q_r |s>>, fstar[r, s] = -i sqrt(d+1) Q_r^T |s>>,
    g = (fstar + f)/sqrt(2) and gbar = i(fstar - f)/sqrt(2) are real.
    """

    d: int
    f: np.ndarray
    fstar: np.ndarray
    g: np.ndarray
    gbar: np.ndarray
    ebar: np.ndarray
    imag_residual: float

    @property
    def n(self) -> int:
        return self.d * self.d


def geom_vectors(bundle: AdjointBundle) -> GeomVectors:
    d, n = bundle.d, bundle.n
    scale = np.sqrt(d + 1)
    f = 1j * scale * bundle.Q.transpose(0, 2, 1)
    fstar = -1j * scale * bundle.Q
    diag = np.arange(n)
    f[diag, diag] = 0
    fstar[diag, diag] = 0

    g = (fstar + f) / np.sqrt(2)
    gbar = 1j * (fstar - f) / np.sqrt(2)
    imag = max(max_abs(g.imag), max_abs(gbar.imag))

    ebar = (
        np.sqrt(2 * d / (d - 1)) * bundle.e
        - np.sqrt((d + 1) / (d - 1)) * bundle.v0[None, :]
    )
    return GeomVectors(
        d=d, f=f, fstar=fstar, g=g.real, gbar=gbar.real, ebar=ebar, imag_residual=imag
    )


def check_geom_vectors(
    gv: GeomVectors, bundle: AdjointBundle, tol: float = 1e-9
) -> VerificationReport:
    n = gv.n
    off = ~np.eye(n, dtype=bool)
    report = VerificationReport()

    norms = np.einsum("rsi,rsi->rs", gv.f.conj(), gv.f).real
    report.measure("geometry.vectors.f_unit", max_abs((norms - 1)[off]), tol)
    cross = np.einsum("rsi,rsi->rs", gv.f.conj(), gv.fstar)
    report.measure("geometry.vectors.f_perp_fstar", max_abs(cross[off]), tol)
    report.measure("geometry.vectors.g_real", gv.imag_residual, tol)
    report.measure(
        "geometry.vectors.g_antisymmetric",
        max_abs(gv.g + gv.g.transpose(1, 0, 2)),
        tol,
    )
    gg = np.einsum("rsi,rsi->rs", gv.g, gv.g)
    bb = np.einsum("rsi,rsi->rs", gv.gbar, gv.gbar)
    gb = np.einsum("rsi,rsi->rs", gv.g, gv.gbar)
    frame_error = max(max_abs((gg - 1)[off]), max_abs((bb - 1)[off]), max_abs(gb))
    report.measure("geometry.vectors.g_gbar_orthonormal", frame_error, tol)

    ebar = gv.ebar
    report.measure("geometry.vectors.ebar_perp_v0", max_abs(ebar @ bundle.v0), tol)
    report.measure(
        "geometry.vectors.ebar_unit", max_abs(np.sum(ebar * ebar, axis=1) - 1), tol
    )
    kernel = max(
        max_abs(np.einsum("rij,rj->ri", m, ebar))
        for m in (bundle.Q, bundle.QT, bundle.Rbar)
    )
    report.measure("geometry.vectors.ebar_in_kernels", kernel, tol)
    return report
