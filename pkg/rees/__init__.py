"""
bourbakikit rees module

The Rees algebra of the Z_{n-2} Bourbaki ideal as an affine semigroup.
"""

from .semigroup import (
    LatticeVector,
    SemigroupDecomposition,
    f1_vector,
    f2_vector,
    in_semigroup,
    semigroup_generators,
    semigroup_membership
)
from .cone import (
    ConeStatus,
    cone_inequalities,
    cone_membership,
    cycle_independent_sets,
    enumerate_window
)
from .normality import (
    GORENSTEIN,
    INCONCLUSIVE,
    TYPE_TWO,
    CanonicalReport,
    NormalityReport,
    ReductionReport,
    canonical_generators,
    interior_reduction_check,
    normality_check,
    reduce_interior_point
)

__all__ = [
    "LatticeVector",
    "SemigroupDecomposition",
    "f1_vector",
    "f2_vector",
    "in_semigroup",
    "semigroup_generators",
    "semigroup_membership",
    "ConeStatus",
    "cone_inequalities",
    "cone_membership",
    "cycle_independent_sets",
    "enumerate_window",
    "GORENSTEIN",
    "INCONCLUSIVE",
    "TYPE_TWO",
    "CanonicalReport",
    "NormalityReport",
    "ReductionReport",
    "canonical_generators",
    "interior_reduction_check",
    "normality_check",
    "reduce_interior_point"
]
