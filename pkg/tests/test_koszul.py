import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from math import comb

import pytest

from algebra.polynomial import Polynomial, variables
from bourbaki.numbers import e1_from_resolution
from core.exceptions import InvalidLabelError, RangeError, RankDeficiencyError
from koszul.complex import (
    cokernel_presentation,
    cycle_rank,
    differential,
    e1_of_cycle,
    restrict_map,
    truncated_resolution
)
from koszul.wedge import hat_index, lex_wedge_basis, multidegree, parse_wedge, wedge_basis, wedge_name
from linalg.rank import rank_over_fraction_field


def test_wedge_basis_is_colex():
    assert wedge_basis(4, 2) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert lex_wedge_basis(4, 2) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert wedge_basis(3, 0) == [()]
    with pytest.raises(RangeError):
        wedge_basis(3, 4)


def test_labels():
    assert parse_wedge("e124", 5) == (1, 2, 4)
    assert wedge_name((1, 2, 4)) == "e124"
    assert multidegree((1, 3), 3) == (1, 0, 1)
    with pytest.raises(InvalidLabelError):
        parse_wedge("e221", 5)
    with pytest.raises(InvalidLabelError):
        parse_wedge("e16", 5)


def test_hat_signs():
    assert hat_index((1,), 3) == ((2, 3), 1)
    assert hat_index((2,), 3) == ((1, 3), -1)
    assert hat_index((1, 3), 3) == ((2,), -1)


def test_differential_sign_convention():
    x1, x2, x3 = variables(3)
    d1 = differential(3, 1)
    assert d1.matrix.row(0) == (x1, x2, x3)
    d2 = differential(3, 2)
    column = d2.column_of((1, 2))
    assert column[d2.matrix.row_index((1,))] == -x2
    assert column[d2.matrix.row_index((2,))] == x1
    assert d2.col_degrees()[0] == (1, 1, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_differentials_compose_to_zero(n):
    for k in range(1, n):
        product = differential(n, k).matrix @ differential(n, k + 1).matrix
        assert product.is_zero()


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_rank_of_differentials(n):
    for i in range(2, n):
        assert rank_over_fraction_field(differential(n, i).matrix) == comb(n - 1, i - 1) == cycle_rank(n, i)


def test_truncated_resolution_gives_e1():
    for n in range(3, 8):
        for i in range(2, n):
            assert e1_from_resolution(truncated_resolution(n, i)) == e1_of_cycle(n, i)
    res = truncated_resolution(4, 2)
    assert res.betti() == {0: {2: 6}, 1: {3: 4}, 2: {4: 1}}


def test_restrict_map():
    x1, x2, x3 = variables(3)
    zero = Polynomial.zero(3)
    M = restrict_map(differential(3, 2), [{(1, 2): 1}, {(1, 2): 1, (2, 3): -1}])
    assert M.shape == (3, 2)
    assert M.column(0) == (-x2, x1, zero)
    assert M.column(1) == (-x2, x1 + x3, -x2)
    assert M.col_labels == ("e12", "e12-e23")
    with pytest.raises(InvalidLabelError):
        restrict_map(differential(3, 2), [{(1, 2, 3): 1}])


def test_cokernel_presentation():
    x1, x2, x3 = variables(3)
    single = cokernel_presentation(3, 2, [{(1, 2): 1}])
    assert single.eliminated == [(1, 2)]
    assert single.matrix.column(0) == (-x2, x1)

    chain = cokernel_presentation(3, 2, [{(1, 2): 1, (2, 3): -1}])
    assert chain.substitution == {(1, 2): {(2, 3): 1}}
    assert chain.matrix.row_labels == ((1, 3), (2, 3))
    assert chain.matrix.column(0) == (-x2, x1 + x3)

    flipped = cokernel_presentation(3, 2, [{(1, 2): 1}], row_order=[(2, 3), (1, 3)], row_signs=[1, -1])
    assert flipped.matrix.column(0) == (x1, x2)


def test_cokernel_presentation_errors():
    with pytest.raises(RankDeficiencyError):
        cokernel_presentation(3, 2, [{(1, 2): 1}, {(1, 2): 2}])
    with pytest.raises(InvalidLabelError):
        cokernel_presentation(3, 2, [{(1,): 1}])
    with pytest.raises(InvalidLabelError):
        cokernel_presentation(3, 2, [{(1, 2): 1}], row_order=[(1, 3)])
