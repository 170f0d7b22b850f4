"""Reconstruction of SIC families from Gram projectors and angle tensors."""

from .angles import (
    Angle2Verdict,
    GaugeResult,
    angle2_from_angle3,
    check_angle2_conditions,
    cocycle_residual,
    gauge_equivalent,
    reconstruct_from_theta3,
)
from .projector import (
    GramProjector,
    check_rank_d_projector,
    gram_projector_from_angle2,
    povm_from_gram_projector,
    projector_traces,
    sic_from_gram_projector,
)
from .unitary import fidelity_deficit, recover_unitary

__all__ = [
    "Angle2Verdict",
    "GaugeResult",
    "GramProjector",
    "angle2_from_angle3",
    "check_angle2_conditions",
    "check_rank_d_projector",
    "cocycle_residual",
    "fidelity_deficit",
    "gauge_equivalent",
    "gram_projector_from_angle2",
    "povm_from_gram_projector",
    "projector_traces",
    "reconstruct_from_theta3",
    "recover_unitary",
    "sic_from_gram_projector",
]
