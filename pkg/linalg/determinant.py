"""
Exact determinants of polynomial matrices

Sparse matrices (the Koszul case) go through Laplace expansion memoized
on the set of remaining columns; denser ones use fraction-free Bareiss
elimination with exact division.
"""

import logging
from functools import lru_cache
from typing import List, Sequence

from algebra.polynomial import Polynomial
from config import settings
from core.exceptions import ShapeError

from .matrix import PolyMatrix

logger = logging.getLogger(__name__)


def det(M: PolyMatrix) -> Polynomial:
    """Determinant; a 0x0 matrix has determinant 1"""
    if not M.is_square():
        raise ShapeError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    if M.rows == 0:
        return Polynomial.one(M.n)
    if M.rows == 1:
        return M[0, 0]
    if M.density() <= settings.LAPLACE_DENSITY_THRESHOLD:
        return det_laplace(M.entries(), M.n)
    return det_bareiss(M.entries(), M.n)


def det_laplace(rows: Sequence[Sequence[Polynomial]], n: int) -> Polynomial:
    """Expansion along successive rows, memoized on the remaining columns"""
    size = len(rows)
    support = [[j for j, p in enumerate(row) if not p.is_zero] for row in rows]
    zero = Polynomial.zero(n)

    @lru_cache(maxsize=None)
    def expand(mask: int) -> Polynomial:
        depth = size - bin(mask).count("1")
        if depth == size:
            return Polynomial.one(n)
        total = zero
        for j in support[depth]:
            if not mask & (1 << j):
                continue
            # sign is the position of j among the columns still present
            position = bin(mask & ((1 << j) - 1)).count("1")
            minor = expand(mask & ~(1 << j))
            if minor.is_zero:
                continue
            term = rows[depth][j] * minor
            total = total - term if position % 2 else total + term
        return total

    result = expand((1 << size) - 1)
    expand.cache_clear()
    return result


def det_bareiss(rows: Sequence[Sequence[Polynomial]], n: int) -> Polynomial:
    """Fraction-free elimination with row swaps on zero pivots"""
    size = len(rows)
    work: List[List[Polynomial]] = [list(row) for row in rows]
    sign = 1
    previous = Polynomial.one(n)
    for k in range(size - 1):
        if work[k][k].is_zero:
            swap = next((i for i in range(k + 1, size) if not work[i][k].is_zero), None)
            if swap is None:
                return Polynomial.zero(n)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = pivot * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = value.exact_div(previous) if not value.is_zero else value
            work[i][k] = Polynomial.zero(n)
        previous = pivot
    result = work[size - 1][size - 1]
    return -result if sign < 0 else result
