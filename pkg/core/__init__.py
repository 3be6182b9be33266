"""
bourbakikit core module

Shared error types, fingerprints and worker fan-out.
"""

from .exceptions import (
    BourbakiKitError,
    DimensionMismatchError,
    NotDivisibleError,
    EmptyGeneratorListError,
    ShapeError,
    RangeError,
    RankDeficiencyError,
    InvalidLabelError,
    NonMonomialError,
    InputFormatError
)
from .fingerprint import create_fingerprint
from .workers import get_worker_count, parallel_map

__version__ = "1.0.0"
__all__ = [
    "BourbakiKitError",
    "DimensionMismatchError",
    "NotDivisibleError",
    "EmptyGeneratorListError",
    "ShapeError",
    "RangeError",
    "RankDeficiencyError",
    "InvalidLabelError",
    "NonMonomialError",
    "InputFormatError",
    "create_fingerprint",
    "get_worker_count",
    "parallel_map"
]
