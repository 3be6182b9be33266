import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import random
from math import comb

import pytest

from algebra.polynomial import Polynomial, variables
from bourbaki import (
    BourbakiCertificate,
    GradedModuleData,
    IdealGens,
    bourbaki_number,
    check_bourbaki_map,
    check_presentation_criterion,
    cycle_bourbaki_number,
    cycle_module_data,
    extract_bourbaki_ideal,
    extraction_details,
    generic_bourbaki_search,
    height_ge_two,
    hilbert_burch,
    taylor_presentation,
    verify_certificate
)
from bourbaki.criteria import REASON_ALL_MINORS_VANISH, REASON_COMMON_FACTOR, REASON_RANK_DEFICIENT
from catalog import z_nminus2
from core.exceptions import NonMonomialError, RangeError, RankDeficiencyError, ShapeError
from koszul.complex import cycle_rank, differential
from linalg.matrix import PolyMatrix


@pytest.fixture
def xs():
    return variables(3)


def random_monomial_ideal(rng: random.Random, n: int, max_gens: int = 6) -> IdealGens:
    """Pairwise non-dividing monomials with no common variable"""
    while True:
        count = rng.randint(2, max_gens)
        exps = {tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(count)}
        if len(exps) < 2:
            continue
        if any(all(a <= b for a, b in zip(u, v)) for u in exps for v in exps if u != v):
            continue
        if any(all(e[k] > 0 for e in exps) for k in range(n)):
            continue
        return IdealGens([Polynomial.monomial(n, e) for e in exps])


def test_bourbaki_number_formula():
    assert bourbaki_number(2, 3, 4) == 0
    assert bourbaki_number(3, 6, 15) == 0
    with pytest.raises(RangeError):
        bourbaki_number(2, 0, 1)
    with pytest.raises(RangeError):
        GradedModuleData(n=3, k=1, r=0, e1=0)


def test_cycle_bourbaki_numbers_match_closed_form():
    for n in range(3, 9):
        for i in range(2, n):
            data = cycle_module_data(n, i)
            assert data.r == comb(n - 1, i - 1)
            assert data.e1 == n * comb(n - 2, i - 2)
            expected = i * comb(n - 1, i - 1) - n * comb(n - 2, i - 2) - i
            assert bourbaki_number(data.k, data.r, data.e1) == expected == cycle_bourbaki_number(n, i)
    assert cycle_bourbaki_number(5, 3) == 0
    with pytest.raises(RangeError):
        cycle_bourbaki_number(5, 5)


def test_hilbert_burch_agrees_for_top_cycles():
    for n in range(3, 9):
        m, shape = hilbert_burch([n - 1] * n, [n], n - 1)
        assert m == 2 - n == cycle_bourbaki_number(n, n - 1)
        assert shape.rank(0) == n
        assert shape.rank(1) == n - 1
    with pytest.raises(RangeError):
        hilbert_burch([1, 1], [2], 1)


def test_ideal_gens_are_canonical(xs):
    x1, x2, _ = xs
    ideal = IdealGens([2 * x1, x1, Polynomial.zero(3), -x2])
    assert len(ideal) == 2
    assert ideal.same_ideal_generators(IdealGens([x2, x1]))
    assert ideal.is_monomial()
    assert IdealGens.from_dict(ideal.to_dict()).same_ideal_generators(ideal)


def test_height_ge_two(xs):
    x1, x2, x3 = xs
    assert height_ge_two(IdealGens([x1, x2]))
    assert not height_ge_two(IdealGens([x1 * x2, x1 * x3]))
    assert not height_ge_two(IdealGens([]))


def test_check_bourbaki_map(xs):
    x1, x2, _ = xs
    common = check_bourbaki_map(PolyMatrix([[x1], [x1 * x2]]), 1)
    assert not common.verdict
    assert common.reason == REASON_COMMON_FACTOR
    assert common.gcd_witness == x1

    vanishing = check_bourbaki_map(PolyMatrix.zeros(2, 2, 3), 2)
    assert not vanishing.verdict
    assert vanishing.reason == REASON_ALL_MINORS_VANISH

    assert check_bourbaki_map(PolyMatrix([[x1], [x2]]), 1).verdict
    assert check_bourbaki_map(PolyMatrix([[x1], [x2]]), 0).verdict
    with pytest.raises(ShapeError):
        check_bourbaki_map(PolyMatrix([[x1], [x2]]), 2)


def test_presentation_criterion(xs):
    x1, x2, _ = xs
    psi = taylor_presentation(IdealGens([x1, x2]))
    deficient = check_presentation_criterion(psi, 2, 1)
    assert not deficient.verdict
    assert deficient.reason == REASON_RANK_DEFICIENT
    assert check_presentation_criterion(psi, 2, 2).verdict
    with pytest.raises(ShapeError):
        check_presentation_criterion(psi, 3, 1)
    with pytest.raises(ShapeError):
        check_presentation_criterion(psi, 2, 3)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_presentation_criterion_on_monomial_cycle_presentation(n):
    H = z_nminus2(n).presentation
    assert H.rows == n
    certificate = check_presentation_criterion(H, n, 2)
    assert certificate.minor_size == n - 1
    assert certificate.verdict
    assert certificate.gcd_witness.is_one()


def test_verify_certificate(xs):
    x1, x2, _ = xs
    certificate = check_bourbaki_map(PolyMatrix([[x1], [x2]]), 1)
    assert verify_certificate(certificate)
    forged = BourbakiCertificate(certificate.matrix_used, 1, certificate.gcd_witness, False)
    assert not verify_certificate(forged)
    assert certificate.to_dict()["matrix_fingerprint"] == certificate.fingerprint()


def test_taylor_presentation(xs):
    x1, x2, x3 = xs
    psi = taylor_presentation(IdealGens([x1 * x2, x2 * x3]))
    assert psi.shape == (2, 1)
    assert set(psi.row_labels) == {"x1*x2", "x2*x3"}
    assert set(psi.column(0)) == {x3, -x1}
    with pytest.raises(NonMonomialError):
        taylor_presentation(IdealGens([x1 + x2, x3]))
    with pytest.raises(ShapeError):
        taylor_presentation(IdealGens([]))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_extraction_recovers_monomial_ideals(n):
    rng = random.Random(2024 + n)
    for _ in range(25):
        ideal = random_monomial_ideal(rng, n)
        extracted, divisor = extract_bourbaki_ideal(taylor_presentation(ideal))
        assert extracted.same_ideal_generators(ideal)
        assert divisor.is_monomial()


def test_extraction_errors(xs):
    x1, x2, _ = xs
    with pytest.raises(ShapeError):
        extraction_details(PolyMatrix([[x1, x2]]))
    with pytest.raises(RankDeficiencyError) as err:
        extraction_details(PolyMatrix([[x1, x2], [x1, x2], [x1, x2]]))
    assert err.value.message.startswith("no full-rank submatrix")
    B = taylor_presentation(IdealGens([x1, x2]))
    with pytest.raises(ShapeError):
        extraction_details(B, C=PolyMatrix([[x1, x2], [x2, x1]]))


def test_generic_search_on_z2():
    A = differential(4, 2).matrix
    result = generic_bourbaki_search(A, A.cols, cycle_rank(4, 2), seed=3)
    assert result.success
    assert len(result.lam) == A.cols
    assert all(len(row) == 2 for row in result.lam)
    assert verify_certificate(result.certificate)

    again = generic_bourbaki_search(A, A.cols, cycle_rank(4, 2), seed=3)
    assert again.lam == result.lam
    assert again.attempts == result.attempts


def test_generic_search_edge_cases():
    zero = PolyMatrix.zeros(3, 3, 3)
    failed = generic_bourbaki_search(zero, 3, 3, seed=1, max_attempts=5)
    assert not failed.success
    assert failed.certificate is None
    assert failed.attempts == 5
    assert len(failed.log) == 5

    trivial = generic_bourbaki_search(zero, 3, 1)
    assert trivial.success
    assert trivial.attempts == 0
    assert trivial.lam == [[], [], []]
    with pytest.raises(ShapeError):
        generic_bourbaki_search(zero, 4, 2)


def test_generic_search_succeeds_quickly_with_default_seed():
    for n in range(3, 6):
        for i in range(2, n):
            A = differential(n, i).matrix
            result = generic_bourbaki_search(A, A.cols, cycle_rank(n, i), max_attempts=5)
            assert result.success
            assert verify_certificate(result.certificate)
