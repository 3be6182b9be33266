"""
bourbakikit linalg module

Polynomial matrices, determinants, minors and ranks.
"""

from .matrix import PolyMatrix
from .determinant import det, det_bareiss, det_laplace
from .minors import (
    colex_combinations,
    has_perfect_matching,
    iter_minors,
    minor,
    minors_gcd,
    select_full_rank_submatrix,
    signed_maximal_minors
)
from .rank import (
    fraction_det,
    rank_certificate,
    rank_mod_p,
    rank_over_fraction_field,
    row_echelon
)

__all__ = [
    "PolyMatrix",
    "det",
    "det_bareiss",
    "det_laplace",
    "colex_combinations",
    "has_perfect_matching",
    "iter_minors",
    "minor",
    "minors_gcd",
    "select_full_rank_submatrix",
    "signed_maximal_minors",
    "fraction_det",
    "rank_certificate",
    "rank_mod_p",
    "rank_over_fraction_field",
    "row_echelon"
]
