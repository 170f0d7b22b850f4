"""Adjoint representation of SIC projectors and the Q-Q^T property."""

from .bundle import AdjointBundle, adjoint_bundle, check_spectral, e_vectors, v0_vector
from .converse import (
    ConverseResult,
    MetricCheckResult,
    StructureConstants,
    metric_check,
    pauli_basis,
    planted_basis,
    sic_from_qqt_basis,
    structure_constants,
)
from .identities import hs_identities, sum_identities
from .qqt import (
    QQT_TOL,
    SIGMA_Y,
    QqtCanonicalForm,
    is_qqt,
    qqt_canonical_form,
    qqt_error,
    qqt_projector,
)
from .simplicial import ad_matrix, killing_form, killing_relation_check, simplicial_basis

__all__ = [
    "AdjointBundle",
    "adjoint_bundle",
    "check_spectral",
    "e_vectors",
    "v0_vector",
    "ConverseResult",
    "MetricCheckResult",
    "StructureConstants",
    "metric_check",
    "pauli_basis",
    "planted_basis",
    "sic_from_qqt_basis",
    "structure_constants",
    "hs_identities",
    "sum_identities",
    "QQT_TOL",
    "SIGMA_Y",
    "QqtCanonicalForm",
    "is_qqt",
    "qqt_canonical_form",
    "qqt_error",
    "qqt_projector",
    "ad_matrix",
    "killing_form",
    "killing_relation_check",
    "simplicial_basis",
]
