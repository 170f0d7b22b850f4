"""Subspace geometry of the adjoint projectors."""

from .subspaces import (
    SubspaceFrame,
    check_uniform_inclination,
    inclination,
    intersection_dimension,
    principal_cosines,
)
from .pairs import (
    f_sum_identities,
    geometry_sweep,
    pair_sample,
    verify_q_geometry,
    verify_r_geometry,
)
from .vectors import GeomVectors, check_geom_vectors, geom_vectors

__all__ = [
    "SubspaceFrame",
    "check_uniform_inclination",
    "inclination",
    "intersection_dimension",
    "principal_cosines",
    "f_sum_identities",
    "geometry_sweep",
    "pair_sample",
    "verify_q_geometry",
    "verify_r_geometry",
    "GeomVectors",
    "check_geom_vectors",
    "geom_vectors",
]
