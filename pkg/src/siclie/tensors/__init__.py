"""Gram data, angle tensors, triple products and their identities."""

from .gram import (
    GramData,
    TripleTensors,
    gram,
    k_matrix,
    load_theta3,
    save_theta3,
    triple_from_gram,
    triple_products,
    triple_trace_check,
)
from .identities import (
    PureStateResult,
    check_two_design,
    commutator_expansion_check,
    expand,
    expansion_check,
    gauge_invariance_check,
    jacobi_check,
    pure_state_check,
    reassemble,
)

__all__ = [
    "GramData",
    "PureStateResult",
    "TripleTensors",
    "check_two_design",
    "commutator_expansion_check",
    "expand",
    "expansion_check",
    "gauge_invariance_check",
    "gram",
    "jacobi_check",
    "k_matrix",
    "load_theta3",
    "pure_state_check",
    "reassemble",
    "save_theta3",
    "triple_from_gram",
    "triple_products",
    "triple_trace_check",
]
