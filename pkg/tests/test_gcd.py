import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import random
from fractions import Fraction

import pytest
import sympy

from algebra.gcd import content_in, gcd_of_list, poly_gcd, primitive_in, pseudo_remainder
from algebra.polynomial import Polynomial, variables
from core.exceptions import DimensionMismatchError, EmptyGeneratorListError


def random_poly(rng: random.Random, n: int, terms: int, degree: int) -> Polynomial:
    data = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, degree) for _ in range(n))
        data[exps] = data.get(exps, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial(n, data)


def to_sympy(f: Polynomial, symbols):
    expr = sympy.Integer(0)
    for exps, coeff in f.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, e in zip(symbols, exps):
            term *= s ** e
        expr += term
    return expr


def from_sympy(expr, symbols, n: int) -> Polynomial:
    poly = sympy.Poly(expr, *symbols)
    terms = {}
    for exps, coeff in poly.terms():
        coeff = sympy.Rational(coeff)
        terms[tuple(int(e) for e in exps)] = Fraction(int(coeff.p), int(coeff.q))
    return Polynomial(n, terms)


@pytest.fixture
def xs():
    return variables(4)


def test_degenerate_inputs(xs):
    x1, x2, x3, _ = xs
    zero = Polynomial.zero(4)
    assert poly_gcd(zero, zero).is_zero
    assert poly_gcd(-2 * x1, zero) == x1
    assert poly_gcd(Polynomial.constant(4, 5), x1 + x2).is_one()
    assert poly_gcd(x1 * x2 * x2, x2 * x3) == x2
    with pytest.raises(DimensionMismatchError):
        poly_gcd(Polynomial.variable(2, 1), x1)


def test_common_factor_is_found(xs):
    x1, x2, x3, x4 = xs
    h = x1 * x3 - x2 * x4
    f = h * (x1 + x2 + 1)
    g = h * (x3 * x3 - x4)
    assert poly_gcd(f, g) == h.normalized()
    assert poly_gcd(f, f) == f.normalized()


def test_coprime_inputs(xs):
    x1, x2, x3, x4 = xs
    assert poly_gcd(x1 + x2, x3 + x4).is_one()
    assert poly_gcd(x1 * x2 - x3 * x4, x1 * x3 - x2 * x4).is_one()


def test_gcd_matches_sympy():
    rng = random.Random(7)
    n = 3
    symbols = sympy.symbols("x1:4")
    for _ in range(25):
        h = random_poly(rng, n, 2, 2)
        f = h * random_poly(rng, n, 3, 2)
        g = h * random_poly(rng, n, 3, 2)
        if f.is_zero or g.is_zero:
            continue
        expected = from_sympy(sympy.gcd(to_sympy(f, symbols), to_sympy(g, symbols)), symbols, n)
        assert poly_gcd(f, g) == expected.normalized()


def test_gcd_of_list(xs):
    x1, x2, x3, _ = xs
    with pytest.raises(EmptyGeneratorListError):
        gcd_of_list([])
    zero = Polynomial.zero(4)
    assert gcd_of_list([zero, zero]).is_zero
    assert gcd_of_list([zero, x1 * x2, x1 * x3]) == x1
    assert gcd_of_list([x1 * x2, x2 * x3, x1 * x3]).is_one()
    assert gcd_of_list([-3 * x1 * (x2 + x3)]) == x1 * x2 + x1 * x3


def test_contents_and_pseudo_remainder(xs):
    x1, x2, x3, _ = xs
    f = (x1 + x2) * x3 * x3 + (x1 + x2) * x3
    assert content_in(f, 3) == x1 + x2
    assert primitive_in(f, 3) == x3 * x3 + x3
    g = x2 * x3 + x1
    r = pseudo_remainder(f, g, 3)
    assert r.degree_in(3) < g.degree_in(3)
