"""
Height-two criteria for Bourbaki sequences

In a polynomial ring an ideal has height at least two exactly when it is
nonzero and its generators have no common factor, so every test here is
a gcd computation over minors.
"""

import logging

from algebra.gcd import gcd_of_list
from algebra.polynomial import Polynomial
from core.exceptions import ShapeError
from linalg.matrix import PolyMatrix
from linalg.minors import minors_gcd

from .models import BourbakiCertificate, IdealGens

logger = logging.getLogger(__name__)

REASON_COMMON_FACTOR = "common factor"
REASON_ALL_MINORS_VANISH = "all minors vanish"
REASON_RANK_DEFICIENT = "rank-deficient presentation"


def height_ge_two(gens: IdealGens) -> bool:
    if not gens.gens:
        return False
    return gcd_of_list(gens.gens).is_one()


def _certify(matrix: PolyMatrix, size: int) -> BourbakiCertificate:
    if size == 0:
        return BourbakiCertificate(matrix, 0, Polynomial.one(matrix.n), True)
    if size > min(matrix.rows, matrix.cols):
        return BourbakiCertificate(matrix, size, Polynomial.zero(matrix.n), False, REASON_RANK_DEFICIENT)

    witness = minors_gcd(matrix, size)
    if witness.is_zero:
        reason = REASON_ALL_MINORS_VANISH
    elif not witness.is_one():
        reason = REASON_COMMON_FACTOR
    else:
        reason = None
    certificate = BourbakiCertificate(matrix, size, witness, witness.is_one(), reason)
    if certificate.verdict:
        logger.debug(f"✅ I_{size} of a {matrix.rows}x{matrix.cols} map has height >= 2")
    else:
        logger.debug(f"❌ I_{size} of a {matrix.rows}x{matrix.cols} map: {reason} ({witness})")
    return certificate


def check_bourbaki_map(iota_phi: PolyMatrix, s: int) -> BourbakiCertificate:
    """Height of I_s of the composite F -> M -> free module, s = rank F"""
    if s > iota_phi.cols:
        raise ShapeError(f"minor size {s} exceeds the {iota_phi.cols} columns of the map")
    return _certify(iota_phi, s)


def check_presentation_criterion(psi: PolyMatrix, beta0: int, r: int) -> BourbakiCertificate:
    """Height of I_{beta0 - r + 1}(psi) for a presentation on beta0 generators"""
    if psi.rows != beta0:
        raise ShapeError(f"presentation has {psi.rows} rows, expected beta0 = {beta0}")
    if beta0 < r:
        raise ShapeError(f"beta0 = {beta0} is smaller than the rank r = {r}")
    return _certify(psi, beta0 - r + 1)


def verify_certificate(certificate: BourbakiCertificate) -> bool:
    """Recompute the minor gcd and compare with the recorded verdict"""
    fresh = _certify(certificate.matrix_used, certificate.minor_size)
    return fresh.verdict == certificate.verdict and fresh.gcd_witness == certificate.gcd_witness
