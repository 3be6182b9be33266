"""
bourbakikit koszul module

Wedge bases, Koszul differentials and cycle-module presentations.
"""

from .wedge import (
    WedgeIndex,
    hat_index,
    lex_wedge_basis,
    multidegree,
    parse_wedge,
    permutation_sign,
    validate_wedge,
    wedge_basis,
    wedge_name
)
from .complex import (
    CokernelPresentation,
    GradedTwists,
    KoszulMap,
    cokernel_presentation,
    cycle_rank,
    differential,
    e1_of_cycle,
    restrict_map,
    truncated_resolution
)

__all__ = [
    "WedgeIndex",
    "hat_index",
    "lex_wedge_basis",
    "multidegree",
    "parse_wedge",
    "permutation_sign",
    "validate_wedge",
    "wedge_basis",
    "wedge_name",
    "CokernelPresentation",
    "GradedTwists",
    "KoszulMap",
    "cokernel_presentation",
    "cycle_rank",
    "differential",
    "e1_of_cycle",
    "restrict_map",
    "truncated_resolution"
]
