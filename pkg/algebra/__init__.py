"""
bourbakikit algebra module

Exact sparse polynomials over Q and their gcd.
"""

from .polynomial import Polynomial, monomial_key, poly_arith, variables, product
from .gcd import poly_gcd, gcd_of_list, content_in, primitive_in, pseudo_remainder

__all__ = [
    "Polynomial",
    "monomial_key",
    "poly_arith",
    "variables",
    "product",
    "poly_gcd",
    "gcd_of_list",
    "content_in",
    "primitive_in",
    "pseudo_remainder"
]
