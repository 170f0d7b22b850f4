"""SIC sets: construction, validation, search and file formats."""

from .fiducial_io import (
    fiducial_hash,
    format_fiducial,
    load_fiducial,
    load_sic_set,
    resolve_fiducial,
    save_fiducial,
    save_sic_set,
)
from .search import SearchOptions, fiducial_search, max_overlap_residual
from .sicpovm import (
    Fiducial,
    SicSet,
    probabilities,
    random_density_matrix,
    random_fiducial,
    sic_from_fiducial,
    sic_targets,
    state_from_probabilities,
    validate_sic,
)

__all__ = [
    "Fiducial",
    "SearchOptions",
    "SicSet",
    "fiducial_hash",
    "fiducial_search",
    "format_fiducial",
    "load_fiducial",
    "load_sic_set",
    "max_overlap_residual",
    "probabilities",
    "random_density_matrix",
    "random_fiducial",
    "resolve_fiducial",
    "save_fiducial",
    "save_sic_set",
    "sic_from_fiducial",
    "sic_targets",
    "state_from_probabilities",
    "validate_sic",
]
