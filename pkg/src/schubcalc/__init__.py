"""Schubert calculus toolkit: Littlewood-Richardson rules, Schubert polynomials,
Schur P/Q functions and a finite-field geometric oracle."""

from ._accel import BACKEND
from .errors import CapExceeded
from .partitions import (
    AmbientRectangle,
    Partition,
    ShiftedPartition,
    SkewShape,
    complement,
    count_syt_hook_formula,
    double,
    is_staircase_symmetric,
    parse_partition,
    parse_shifted,
)
from .permutations import Permutation, bruhat_leq, reduced_word
from .schubert import divided_difference, monk_expand, schubert_polynomial
from .schur import (
    SchurExpansion,
    duality_pairing,
    grassmannian_product,
    intersection_count,
    lr_coefficient,
    pieri,
    schur_product,
)
from .shifted import f_coefficient, og_intersection_count
from .tableaux import Tableau, enumerate_lr_chains, enumerate_lr_tableaux, enumerate_syt

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CapExceeded",
    "AmbientRectangle", "Partition", "ShiftedPartition", "SkewShape", "complement", "count_syt_hook_formula",
    "double", "is_staircase_symmetric", "parse_partition", "parse_shifted",
    "Permutation", "bruhat_leq", "reduced_word",
    "divided_difference", "monk_expand", "schubert_polynomial",
    "SchurExpansion", "duality_pairing", "grassmannian_product", "intersection_count", "lr_coefficient",
    "pieri", "schur_product",
    "f_coefficient", "og_intersection_count",
    "Tableau", "enumerate_lr_chains", "enumerate_lr_tableaux", "enumerate_syt",
]
