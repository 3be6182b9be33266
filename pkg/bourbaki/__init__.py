"""
bourbakikit bourbaki module

Height-two criteria, ideal extraction, Bourbaki numbers and generic search.
"""

from .models import BourbakiCertificate, Extraction, GradedModuleData, IdealGens
from .criteria import check_bourbaki_map, check_presentation_criterion, height_ge_two, verify_certificate
from .extraction import extract_bourbaki_ideal, extraction_details, taylor_presentation
from .numbers import (
    bourbaki_number,
    cycle_bourbaki_number,
    cycle_module_data,
    e1_from_resolution,
    hilbert_burch
)
from .search import SearchResult, generic_bourbaki_search

__all__ = [
    "BourbakiCertificate",
    "Extraction",
    "GradedModuleData",
    "IdealGens",
    "check_bourbaki_map",
    "check_presentation_criterion",
    "height_ge_two",
    "verify_certificate",
    "extract_bourbaki_ideal",
    "extraction_details",
    "taylor_presentation",
    "bourbaki_number",
    "cycle_bourbaki_number",
    "cycle_module_data",
    "e1_from_resolution",
    "hilbert_burch",
    "SearchResult",
    "generic_bourbaki_search"
]
