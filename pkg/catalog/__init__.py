"""
bourbakikit catalog module

Explicit Bourbaki sequences of Koszul cycles and the multigraded search.
"""

from .models import CatalogBundle
from .constructions import (
    n6_z3_bad_configuration,
    n6_z3_explicit,
    z2,
    z2_block_structure,
    z2_degree_check,
    z2_matrices,
    z_nminus2,
    z_nminus2_witness_minor,
    z_top
)
from .multigraded import (
    MultigradedReport,
    multigraded_exhaustive_search,
    multigraded_obstruction,
    sibling_pruned_subsets
)

__all__ = [
    "CatalogBundle",
    "n6_z3_bad_configuration",
    "n6_z3_explicit",
    "z2",
    "z2_block_structure",
    "z2_degree_check",
    "z2_matrices",
    "z_nminus2",
    "z_nminus2_witness_minor",
    "z_top",
    "MultigradedReport",
    "multigraded_exhaustive_search",
    "multigraded_obstruction",
    "sibling_pruned_subsets"
]
