"""
Rank over the fraction field

Ranks are read off row echelon forms of integer evaluations. The echelon
scan walks columns in index order, so its pivot columns are the first
independent columns of the evaluated matrix; the pivot rows and columns
name a minor that is nonzero at the evaluation point. That minor is then
expanded with det, and a nonzero polynomial certifies the rank exactly.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra.polynomial import Polynomial
from config import settings
from core.exceptions import RankDeficiencyError

from .determinant import det
from .matrix import PolyMatrix

logger = logging.getLogger(__name__)


@dataclass
class EchelonResult:
    rank: int
    pivot_rows: List[int]
    pivot_cols: List[int]


@dataclass
class RankCertificate:
    rank: int
    pivot_rows: List[int] = field(default_factory=list)
    pivot_cols: List[int] = field(default_factory=list)
    point: List[int] = field(default_factory=list)
    attempts: int = 0
    minor: Optional[Polynomial] = None


def evaluate_matrix(M: PolyMatrix, point: Sequence[int]) -> List[List[Fraction]]:
    return [[p.evaluate(point) if not p.is_zero else Fraction(0) for p in row] for row in M.entries()]


def row_echelon(values: Sequence[Sequence[Fraction]], max_rank: Optional[int] = None) -> EchelonResult:
    """Column-scan elimination over Q, tracking original row indices"""
    m = [list(row) for row in values]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    order = list(range(n_rows))
    pivot_cols: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows or (max_rank is not None and piv_r == max_rank):
            break
        i_row = next((i for i in range(piv_r, n_rows) if m[i][piv_c] != 0), None)
        if i_row is None:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            order[piv_r], order[i_row] = order[i_row], order[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if not fr:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                if m[piv_r][c]:
                    m[r][c] -= m[piv_r][c] * frp
        pivot_cols.append(piv_c)
        piv_r += 1
    return EchelonResult(rank=piv_r, pivot_rows=sorted(order[:piv_r]), pivot_cols=pivot_cols)


def fraction_det(values: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix"""
    m = [list(row) for row in values]
    size = len(m)
    result = Fraction(1)
    for k in range(size):
        pivot = next((i for i in range(k, size) if m[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            result = -result
        result *= m[k][k]
        for i in range(k + 1, size):
            factor = m[i][k] / m[k][k]
            if factor:
                for j in range(k, size):
                    m[i][j] -= factor * m[k][j]
    return result


def random_point(rng: random.Random, n: int, bound: Optional[int] = None) -> List[int]:
    bound = settings.RANK_EVAL_BOUND if bound is None else bound
    return [rng.randint(-bound, bound) for _ in range(n)]


def rank_certificate(M: PolyMatrix, seed: Optional[int] = None) -> RankCertificate:
    """Rank with the pivot minor and point that certify it"""
    if M.rows == 0 or M.cols == 0 or M.is_zero():
        return RankCertificate(rank=0)

    rng = random.Random(settings.EVALUATION_SEED if seed is None else seed)
    full = min(M.rows, M.cols)
    best: Optional[RankCertificate] = None
    previous = None
    for attempt in range(1, settings.RANK_RETRIES + 1):
        point = random_point(rng, M.n)
        echelon = row_echelon(evaluate_matrix(M, point))
        if best is None or echelon.rank > best.rank:
            best = RankCertificate(echelon.rank, echelon.pivot_rows, echelon.pivot_cols, point, attempt)
        if echelon.rank == full or echelon.rank == previous:
            break
        previous = echelon.rank
    best.attempts = attempt

    if best.rank:
        best.minor = det(M.submatrix(best.pivot_rows, best.pivot_cols))
        if best.minor.is_zero:
            logger.error(f"❌ Pivot minor {best.pivot_rows}x{best.pivot_cols} is the zero polynomial")
            raise RankDeficiencyError(
                "pivot minor is identically zero",
                details={"rows": best.pivot_rows, "cols": best.pivot_cols}
            )
    logger.debug(f"Rank {best.rank} of {M.rows}x{M.cols} after {best.attempts} evaluations")
    return best


def rank_over_fraction_field(M: PolyMatrix) -> int:
    """Rank of M over Q(x1, ..., xn)"""
    return rank_certificate(M).rank


def rank_mod_p(values: np.ndarray, prime: Optional[int] = None) -> int:
    """Rank of an integer matrix modulo a prime below 2**31"""
    prime = settings.MODULAR_PRIME if prime is None else prime
    m = np.array(values, dtype=np.int64) % prime
    n_rows, n_cols = m.shape
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        nonzero = np.nonzero(m[piv_r:, piv_c])[0]
        if not len(nonzero):
            continue
        i_row = piv_r + int(nonzero[0])
        if i_row != piv_r:
            m[[piv_r, i_row]] = m[[i_row, piv_r]]
        inverse = pow(int(m[piv_r, piv_c]), -1, prime)
        m[piv_r] = (m[piv_r] * inverse) % prime
        below = m[piv_r + 1:, piv_c].copy()
        if below.any():
            m[piv_r + 1:] = (m[piv_r + 1:] - np.outer(below, m[piv_r]) % prime) % prime
        piv_r += 1
    return piv_r


def evaluate_matrix_mod(M: PolyMatrix, point: Sequence[int], prime: Optional[int] = None) -> np.ndarray:
    prime = settings.MODULAR_PRIME if prime is None else prime
    out = np.zeros((M.rows, M.cols), dtype=np.int64)
    for i, row in enumerate(M.entries()):
        for j, p in enumerate(row):
            if not p.is_zero:
                out[i, j] = p.evaluate_mod(point, prime)
    return out


def pivot_minor(M: PolyMatrix, point: Sequence[int], size: int) -> Optional[Tuple[List[int], List[int]]]:
    """Rows and columns of a size x size minor nonzero at point, if any"""
    echelon = row_echelon(evaluate_matrix(M, point), max_rank=size)
    if echelon.rank < size:
        return None
    return echelon.pivot_rows, echelon.pivot_cols
