import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import json
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from algebra.polynomial import Polynomial, variables
from core.exceptions import InputFormatError, InvalidLabelError, RangeError, RankDeficiencyError, ShapeError
from linalg import (
    PolyMatrix,
    colex_combinations,
    det,
    det_bareiss,
    det_laplace,
    fraction_det,
    minors_gcd,
    rank_certificate,
    rank_mod_p,
    rank_over_fraction_field,
    select_full_rank_submatrix,
    signed_maximal_minors
)


@pytest.fixture
def xs():
    return variables(3)


def random_matrix(rng: random.Random, size: int, n: int) -> PolyMatrix:
    grid = []
    for _ in range(size):
        row = []
        for _ in range(size):
            terms = {}
            for _ in range(rng.randint(0, 2)):
                exps = tuple(rng.randint(0, 1) for _ in range(n))
                terms[exps] = terms.get(exps, 0) + rng.randint(-2, 2)
            row.append(Polynomial(n, terms))
        grid.append(row)
    return PolyMatrix(grid, n=n, cols=size)


def sympy_det(M: PolyMatrix, symbols) -> Polynomial:
    def entry(p):
        expr = sympy.Integer(0)
        for exps, coeff in p.terms.items():
            term = sympy.Rational(coeff.numerator, coeff.denominator)
            for s, e in zip(symbols, exps):
                term *= s ** e
            expr += term
        return expr

    value = sympy.expand(sympy.Matrix([[entry(p) for p in row] for row in M.entries()]).det())
    terms = {}
    for exps, coeff in sympy.Poly(value, *symbols).terms():
        coeff = sympy.Rational(coeff)
        terms[tuple(int(e) for e in exps)] = Fraction(int(coeff.p), int(coeff.q))
    return Polynomial(len(symbols), terms)


def test_determinant_conventions(xs):
    x1, x2, x3 = xs
    assert det(PolyMatrix([], n=3, cols=0)).is_one()
    M = PolyMatrix([[x1, x2], [x3, x1]])
    assert det(M) == x1 * x1 - x2 * x3
    with pytest.raises(ShapeError):
        det(PolyMatrix([[x1, x2]]))


def test_determinants_match_sympy():
    rng = random.Random(11)
    symbols = sympy.symbols("x1:3")
    for size in (2, 3, 4):
        for _ in range(4):
            M = random_matrix(rng, size, 2)
            expected = sympy_det(M, symbols)
            assert det_laplace(M.entries(), 2) == expected
            assert det_bareiss(M.entries(), 2) == expected
            assert det(M) == expected


def test_colex_order():
    assert list(colex_combinations(4, 2)) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert list(colex_combinations(3, 0)) == [()]
    assert list(colex_combinations(2, 3)) == []


def test_rank(xs):
    x1, x2, x3 = xs
    zero = Polynomial.zero(3)
    M = PolyMatrix([[x1, x2], [x1 * x3, x2 * x3]])
    assert rank_over_fraction_field(M) == 1
    certificate = rank_certificate(M)
    assert certificate.pivot_cols == [0]
    assert certificate.minor == x1
    assert rank_over_fraction_field(PolyMatrix.zeros(2, 3, 3)) == 0
    N = PolyMatrix([[x1, zero, x3], [zero, x2, x3]])
    assert rank_over_fraction_field(N) == 2
    assert rank_certificate(N).minor == x1 * x2
    assert rank_certificate(PolyMatrix.zeros(2, 3, 3)).minor is None


def test_rank_certificate_rejects_vanishing_minor(xs, monkeypatch):
    x1, x2, _ = xs
    monkeypatch.setattr("linalg.rank.det", lambda M: Polynomial.zero(M.n))
    with pytest.raises(RankDeficiencyError):
        rank_certificate(PolyMatrix([[x1, x2]]))


def test_rank_mod_p():
    assert rank_mod_p(np.array([[1, 2], [2, 4]])) == 1
    assert rank_mod_p(np.eye(3, dtype=np.int64)) == 3
    assert rank_mod_p(np.array([[1, 2], [3, 1]]), prime=5) == 1
    assert fraction_det([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2


def test_minors_gcd(xs):
    x1, x2, x3 = xs
    zero = Polynomial.zero(3)
    M = PolyMatrix([[x1, x2], [x1 * x3, x2 * x3]])
    assert minors_gcd(M, 1).is_one()
    assert minors_gcd(M, 2).is_zero
    column = PolyMatrix([[x1 * x2], [x1 * x3]])
    assert minors_gcd(column, 1) == x1
    N = PolyMatrix([[x1, zero], [zero, x2], [x3, x3]])
    assert minors_gcd(N, 2).is_one()
    with pytest.raises(RangeError):
        minors_gcd(N, 3)


def test_signed_maximal_minors(xs):
    x1, x2, x3 = xs
    zero = Polynomial.zero(3)
    C = PolyMatrix([[x1, zero], [zero, x2], [x3, x3]])
    assert signed_maximal_minors(C) == [-(x2 * x3), -(x1 * x3), x1 * x2]
    with pytest.raises(ShapeError):
        signed_maximal_minors(PolyMatrix([[x1, x2]]))


def test_select_full_rank_submatrix(xs):
    x1, x2, _ = xs
    B = PolyMatrix([[x1, 2 * x1, x2], [x2, 2 * x2, x1]])
    assert select_full_rank_submatrix(B, 1).entries() == B.submatrix(None, [0]).entries()
    assert select_full_rank_submatrix(B, 2).entries() == B.submatrix(None, [0, 2]).entries()
    with pytest.raises(RankDeficiencyError):
        select_full_rank_submatrix(B, 4)
    flat = PolyMatrix([[x1, x2], [x1, x2]])
    with pytest.raises(RankDeficiencyError):
        select_full_rank_submatrix(flat, 2)


def test_labels_and_products(xs):
    x1, x2, x3 = xs
    M = PolyMatrix([[x1, x2], [x3, x1]], row_labels=["a", "b"], col_labels=[(1,), (2,)])
    assert M.select(row_labels=["b"], col_labels=[(2,)])[0, 0] == x1
    with pytest.raises(InvalidLabelError):
        M.row_index("c")
    product = M @ PolyMatrix.identity(2, 3)
    assert product.entries() == M.entries()
    assert M.times_integer_matrix([[1], [-1]]).column(0) == (x1 - x2, x3 - x1)
    assert M.transpose()[0, 1] == x3


def test_matrix_json(xs):
    x1, _, _ = xs
    text = json.dumps({"rows": 2, "cols": 2, "n": 3, "entries": [["x1", "0"], ["1", "x2*x3"]]})
    M = PolyMatrix.from_json(text)
    assert M[0, 0] == x1
    assert M[1, 0].is_one()
    assert PolyMatrix.from_dict(M.to_dict()) == M
    assert M.fingerprint() == PolyMatrix.from_dict(M.to_dict()).fingerprint()

    with pytest.raises(InputFormatError) as err:
        PolyMatrix.from_json('{"rows": 2, "cols": 1, "n": 3, "entries": [["x1"]]}')
    assert "$.entries" in err.value.message
    with pytest.raises(InputFormatError):
        PolyMatrix.from_json("[1, 2")
