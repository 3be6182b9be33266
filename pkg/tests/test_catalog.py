import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest

from algebra.polynomial import Polynomial
from bourbaki.criteria import verify_certificate
from bourbaki.extraction import extraction_details
from catalog import (
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
from catalog.fixtures import z2_divisor, z2_expected, z_nminus2_witness, z_top_expected
from core.exceptions import RangeError


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_z_top_all_pairs(n):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bundle = z_top(n, i, j)
            assert bundle.certificate.verdict
            assert bundle.ideal.same_ideal_generators(z_top_expected(n, i, j))
            assert bundle.ideal.twist == 2 - n
            assert bundle.ideal.generated_degree == 1
            assert bundle.all_checks_pass


def test_z_top_rejects_bad_pairs():
    with pytest.raises(RangeError):
        z_top(4, 2, 2)
    with pytest.raises(RangeError):
        z_top(4, 1, 5)
    with pytest.raises(RangeError):
        z_top(2, 1, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_z_nminus2(n):
    bundle = z_nminus2(n)
    assert bundle.certificate.verdict
    assert bundle.matches_expected
    assert bundle.ideal.twist == 0
    assert all(p.is_monomial() and p.total_degree() == n - 2 for p in bundle.ideal.gens)
    assert len(bundle.ideal) == n
    assert z_nminus2_witness_minor(bundle).normalized() == z_nminus2_witness(n)
    assert bundle.all_checks_pass


def test_z2_for_five_variables():
    bundle = z2(5)
    assert bundle.certificate.verdict
    assert bundle.ideal.same_ideal_generators(z2_expected(5))
    assert len(bundle.ideal) == 7
    assert bundle.divisor == Polynomial.monomial(5, [0, 2, 1, 0, 0])
    assert bundle.ideal.twist == 1
    assert bundle.all_checks_pass


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_z2_structure(n):
    combos, B, C = z2_matrices(n)
    assert len(combos) == n - 2
    assert C.shape == (B.rows, B.rows - 1)
    assert all(z2_block_structure(n).values())
    bundle = z2(n)
    assert bundle.divisor == z2_divisor(n)
    assert all(p.total_degree() == n - 2 for p in bundle.ideal.gens)
    assert bundle.all_checks_pass


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_z2_ideal_is_independent_of_the_chosen_submatrix(n):
    _, B, _ = z2_matrices(n)
    bundle = z2(n)
    assert bundle.checks["annihilates_presentation"]
    flipped = B.submatrix(None, list(reversed(range(B.cols))))
    other = extraction_details(flipped)
    assert other.ideal.same_ideal_generators(bundle.ideal)


def test_z2_degree_check():
    assert z2_degree_check(4)
    with pytest.raises(RangeError):
        z2_matrices(2)


def test_n6_z3_explicit():
    bundle = n6_z3_explicit()
    assert bundle.certificate.verdict
    assert bundle.divisor == Polynomial.monomial(6, [4, 0, 0, 0, 0, 0])
    assert bundle.checks["matrix_matches_display"]
    assert bundle.presentation.shape == (11, 15)
    assert bundle.ideal.twist == 3
    assert all(p.total_degree() == 6 for p in bundle.ideal.gens)
    assert bundle.matches_expected is None
    assert bundle.all_checks_pass


def test_n6_z3_bad_configuration():
    certificate = n6_z3_bad_configuration()
    assert not certificate.verdict
    assert Polynomial.monomial(6, [0, 1, 0, 1, 0, 1]).divides(certificate.gcd_witness)
    assert verify_certificate(certificate)


def test_bundle_serialization():
    payload = z_top(4, 1, 3).to_dict()
    assert payload["name"] == "ztop"
    assert payload["matches_expected"] is True
    assert payload["all_checks_pass"] is True
    assert payload["extras"]["pair"] == [1, 3]
    assert len(payload["F_generators"]) == 2
    assert len(payload["fingerprint"]) > 0
