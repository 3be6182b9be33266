"""
Minors and determinantal ideals

Enumeration order is fixed: column subsets in colexicographic order,
then row subsets in colexicographic order. Early exits and submatrix
choices therefore never depend on scheduling.
"""

import logging
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from algebra.gcd import gcd_of_list, poly_gcd
from algebra.polynomial import Polynomial
from config import settings
from core.exceptions import RangeError, RankDeficiencyError, ShapeError
from core.workers import parallel_map

from .determinant import det
from .matrix import PolyMatrix
from .rank import evaluate_matrix, fraction_det, pivot_minor, random_point, row_echelon

logger = logging.getLogger(__name__)


def colex_combinations(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order"""
    if k == 0:
        yield ()
        return
    if k > n:
        return
    yield from colex_combinations(n - 1, k)
    for head in colex_combinations(n - 1, k - 1):
        yield head + (n - 1,)


def has_perfect_matching(M: PolyMatrix, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """False when the minor on rows x cols is structurally zero"""
    support = [[c for c, j in enumerate(cols) if not M[i, j].is_zero] for i in rows]
    match_of_col = [-1] * len(cols)

    def augment(r: int, seen: List[bool]) -> bool:
        for c in support[r]:
            if seen[c]:
                continue
            seen[c] = True
            if match_of_col[c] < 0 or augment(match_of_col[c], seen):
                match_of_col[c] = r
                return True
        return False

    return all(augment(r, [False] * len(cols)) for r in range(len(rows)))


def minor(M: PolyMatrix, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    if not has_perfect_matching(M, rows, cols):
        return Polynomial.zero(M.n)
    return det(M.submatrix(rows, cols))


def _minor_job(job: Tuple[PolyMatrix, int]) -> Polynomial:
    C, i = job
    value = det(C.delete_row(i))
    return -value if i % 2 else value


def signed_maximal_minors(C: PolyMatrix) -> List[Polynomial]:
    """f_i = (-1)^(i+1) det(C without row i), 1-based i"""
    if C.rows < 2 or C.cols != C.rows - 1:
        raise ShapeError(f"signed maximal minors need an a x (a-1) matrix with a >= 2, got {C.rows}x{C.cols}")
    return parallel_map(_minor_job, [(C, i) for i in range(C.rows)])


def iter_minors(M: PolyMatrix, t: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], Polynomial]]:
    """All t x t minors as (rows, cols, value), colex columns then colex rows"""
    for cols in colex_combinations(M.cols, t):
        for rows in colex_combinations(M.rows, t):
            yield rows, cols, minor(M, rows, cols)


def _probe_minors(M: PolyMatrix, t: int) -> List[Polynomial]:
    # one minor nonzero at a generic point and one avoiding each x_k
    rng = random.Random(settings.EVALUATION_SEED)
    found: List[Polynomial] = []
    seen = set()
    points = []
    for k in range(M.n):
        point = random_point(rng, M.n)
        point[k] = 0
        points.append(point)
    points.append(random_point(rng, M.n))
    for point in points:
        picked = pivot_minor(M, point, t)
        if picked is None:
            continue
        key = (tuple(picked[0]), tuple(picked[1]))
        if key in seen:
            continue
        seen.add(key)
        found.append(det(M.submatrix(*picked)))
    return found


def minors_gcd(M: PolyMatrix, t: int) -> Polynomial:
    """gcd of all t x t minors; 0 when every minor vanishes"""
    if not 1 <= t <= min(M.rows, M.cols):
        raise RangeError(f"minor size {t} outside 1..{min(M.rows, M.cols)} for a {M.rows}x{M.cols} matrix")

    probes = _probe_minors(M, t)
    running: Optional[Polynomial] = gcd_of_list(probes) if probes else None
    if running is not None and running.is_one():
        return running

    logger.debug(f"Enumerating {t}x{t} minors of a {M.rows}x{M.cols} matrix")
    for _, _, value in iter_minors(M, t):
        if value.is_zero:
            continue
        if running is None:
            running = value.normalized()
        elif running.divides(value):
            continue
        else:
            running = poly_gcd(running, value)
        if running.is_one():
            break
    return running if running is not None else Polynomial.zero(M.n)


def select_full_rank_submatrix(B: PolyMatrix, target_cols: int) -> PolyMatrix:
    """Colexicographically first column subset of size target_cols with full rank"""
    if target_cols > B.cols:
        raise RankDeficiencyError(f"no full-rank submatrix: {target_cols} columns requested from {B.cols}")
    if target_cols == 0:
        return B.submatrix(None, [])

    rng = random.Random(settings.EVALUATION_SEED)
    best: Optional[Tuple[List[int], List[int], List[int]]] = None
    for _ in range(settings.RANK_RETRIES):
        point = random_point(rng, B.n)
        echelon = row_echelon(evaluate_matrix(B, point), max_rank=target_cols)
        if echelon.rank < target_cols:
            continue
        # an unlucky point can only push the greedy choice later
        if best is None or echelon.pivot_cols < best[1]:
            best = (echelon.pivot_rows, echelon.pivot_cols, point)
        if best is not None and best[1] == list(range(target_cols)):
            break
    if best is None:
        raise RankDeficiencyError()

    rows, cols, point = best
    if fraction_det([[B[i, j].evaluate(point) for j in cols] for i in rows]) == 0:
        raise RankDeficiencyError()
    logger.debug(f"Selected columns {cols} of a {B.rows}x{B.cols} matrix")
    return B.submatrix(None, cols)
