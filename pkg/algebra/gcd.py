"""
Multivariate gcd over the rationals

Monomial content is split off first, then the remaining factors are
handled by a content / primitive-part recursion on the highest shared
variable with a primitive pseudo-remainder sequence. Before running the
sequence, a univariate image at a random integer point is tried: a
constant image gcd proves coprimality exactly for inputs that are
primitive in the main variable.
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from config import settings
from core.exceptions import DimensionMismatchError, EmptyGeneratorListError

from .polynomial import Polynomial

logger = logging.getLogger(__name__)

_SPECIALIZATION_TRIES = 3
_SPECIALIZATION_BOUND = 1000


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Normalized gcd; gcd(f, 0) = normalized f and gcd(0, 0) = 0"""
    if f.n != g.n:
        raise DimensionMismatchError(f"cannot take gcd of polynomials in {f.n} and {g.n} variables")
    if f.is_zero and g.is_zero:
        return Polynomial.zero(f.n)
    if g.is_zero:
        return f.normalized()
    if f.is_zero:
        return g.normalized()
    if f.is_constant() or g.is_constant():
        return Polynomial.one(f.n)

    mf = f.monomial_content()
    mg = g.monomial_content()
    shared = tuple(min(a, b) for a, b in zip(mf, mg))
    f1 = f.divide_monomial(mf)
    g1 = g.divide_monomial(mg)
    if f1.is_constant() or g1.is_constant():
        return Polynomial.monomial(f.n, shared)

    core = _gcd_primitive(f1.normalized(), g1.normalized())
    return core.shift(shared).normalized()


def gcd_of_list(fs: Sequence[Polynomial]) -> Polynomial:
    """Iterated gcd, smallest inputs first, stopping once the gcd is 1"""
    fs = list(fs)
    if not fs:
        raise EmptyGeneratorListError()
    n = fs[0].n
    if any(f.n != n for f in fs):
        raise DimensionMismatchError("generators live in different polynomial rings")

    nonzero = sorted((f for f in fs if not f.is_zero), key=len)
    if not nonzero:
        return Polynomial.zero(n)

    result = nonzero[0].normalized()
    for f in nonzero[1:]:
        if result.is_one():
            break
        if result.divides(f):
            continue
        result = poly_gcd(result, f)
    return result


def content_in(f: Polynomial, var: int) -> Polynomial:
    """gcd of the coefficients of f viewed as a polynomial in x_var"""
    if f.is_zero:
        return f
    return gcd_of_list(list(f.coefficients_in(var).values()))


def primitive_in(f: Polynomial, var: int) -> Polynomial:
    """f divided by its content in x_var, normalized"""
    if f.is_zero:
        return f
    return f.exact_div(content_in(f, var)).normalized()


def pseudo_remainder(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """A remainder of lc(g)^k * f by g in x_var, for some k >= 0"""
    dg = g.degree_in(var)
    lc_g = g.coefficients_in(var)[dg]
    remainder = f
    while not remainder.is_zero:
        dr = remainder.degree_in(var)
        if dr < dg:
            break
        lc_r = remainder.coefficients_in(var)[dr]
        step = [0] * f.n
        step[var - 1] = dr - dg
        remainder = lc_g * remainder - (lc_r * g).shift(step)
    return remainder


def _gcd_primitive(f: Polynomial, g: Polynomial) -> Polynomial:
    # f and g are nonzero and free of monomial content
    if f.is_constant() or g.is_constant():
        return Polynomial.one(f.n)

    vf = set(f.variables())
    vg = set(g.variables())
    # a variable missing from one side cannot occur in the gcd
    if vf - vg:
        return poly_gcd(content_in(f, max(vf - vg)), g)
    if vg - vf:
        return poly_gcd(f, content_in(g, max(vg - vf)))

    var = max(vf & vg)
    cf = content_in(f, var)
    cg = content_in(g, var)
    content = poly_gcd(cf, cg)
    pf = f.exact_div(cf).normalized()
    pg = g.exact_div(cg).normalized()

    if _coprime_by_specialization(pf, pg, var):
        return content

    primitive = _primitive_prs(pf, pg, var)
    return (content * primitive).normalized()


def _primitive_prs(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    a, b = (f, g) if f.degree_in(var) >= g.degree_in(var) else (g, f)
    while True:
        r = pseudo_remainder(a, b, var)
        if r.is_zero:
            return b
        if r.degree_in(var) == 0:
            return Polynomial.one(f.n)
        a, b = b, primitive_in(r, var)


def _coprime_by_specialization(f: Polynomial, g: Polynomial, var: int) -> bool:
    """True only when gcd(f, g) = 1 is proven; f, g primitive in x_var"""
    lc_f = f.coefficients_in(var)[f.degree_in(var)]
    lc_g = g.coefficients_in(var)[g.degree_in(var)]
    rng = random.Random(settings.EVALUATION_SEED)
    for _ in range(_SPECIALIZATION_TRIES):
        point = [rng.randint(-_SPECIALIZATION_BOUND, _SPECIALIZATION_BOUND) for _ in range(f.n)]
        point[var - 1] = 0
        if not lc_f.evaluate(point) or not lc_g.evaluate(point):
            continue
        uf = _univariate_image(f, var, point)
        ug = _univariate_image(g, var, point)
        return _univariate_gcd_degree(uf, ug) == 0
    logger.debug(f"No lucky specialization point for x{var}; falling back to PRS")
    return False


def _univariate_image(f: Polynomial, var: int, point: List[int]) -> List[Fraction]:
    """Dense coefficient list (lowest degree first) of f at point, in x_var"""
    values = [Fraction(v) for v in point]
    coeffs: Dict[int, Fraction] = {}
    slot = var - 1
    for exps, coeff in f.terms.items():
        term = coeff
        for k, (v, e) in enumerate(zip(values, exps)):
            if e and k != slot:
                term *= v ** e
        coeffs[exps[slot]] = coeffs.get(exps[slot], Fraction(0)) + term
    degree = max(coeffs) if coeffs else 0
    return [coeffs.get(d, Fraction(0)) for d in range(degree + 1)]


def _trim(poly: List[Fraction]) -> List[Fraction]:
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _univariate_gcd_degree(a: List[Fraction], b: List[Fraction]) -> Optional[int]:
    """Degree of gcd over Q of two dense univariate polynomials"""
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        while len(a) >= len(b) and a:
            factor = a[-1] / b[-1]
            shift = len(a) - len(b)
            for k, c in enumerate(b):
                a[k + shift] -= factor * c
            _trim(a)
        a, b = b, a
    return len(a) - 1 if a else None
