"""Finite-field oracle: subspaces, flags and Schubert conditions over GF(q)."""

from .empirical import (
    TrialReport,
    empirical_intersection,
    empirical_og_intersection,
    intersection_points,
    intersection_trials,
    isotropic_cell_count,
    isotropic_cell_count_bruteforce,
    og_intersection_points,
    og_intersection_trials,
    splitting_degree,
)
from .field import GF, FqScalar, field
from .flags import FlagFq, gram, is_isotropic, reverse_form
from .grassmannian import (
    count_by_rowspan,
    enumerate_grassmannian,
    exhaustive_pairs,
    grassmannian_size,
    position_census,
    schubert_condition,
    schubert_position,
)
from .linalg import FqMatrix, annihilator, cell_partition, cell_pattern, dim_intersection, inverse, is_rref, \
    plucker, plucker_index, row_spans_equal, rref

__all__ = [
    "GF", "FqScalar", "field", "FqMatrix", "FlagFq", "TrialReport",
    "rref", "is_rref", "row_spans_equal", "cell_partition", "cell_pattern", "plucker", "plucker_index",
    "annihilator", "dim_intersection", "inverse", "gram", "is_isotropic", "reverse_form",
    "enumerate_grassmannian", "grassmannian_size", "count_by_rowspan", "position_census", "exhaustive_pairs",
    "schubert_condition", "schubert_position",
    "empirical_intersection", "intersection_points", "intersection_trials",
    "empirical_og_intersection", "og_intersection_points", "og_intersection_trials",
    "isotropic_cell_count", "isotropic_cell_count_bruteforce", "splitting_degree",
]
