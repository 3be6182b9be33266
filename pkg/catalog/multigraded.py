"""
Multigraded Bourbaki sequences of Koszul cycles

A multigraded sequence takes F spanned by r-1 canonical basis elements
of K_i. Its minors are monomials, so the minor gcd is 1 exactly when,
for every k, some maximal minor avoids x_k. The exhaustive search tests
that through ranks modulo a prime at points with x_k = 0 and all other
coordinates nonzero; there a monomial minor vanishes exactly when it
involves x_k.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from bourbaki.criteria import check_bourbaki_map
from config import settings
from core.exceptions import RangeError
from core.workers import get_worker_count, parallel_map
from koszul.complex import differential, restrict_map
from koszul.wedge import WedgeIndex, wedge_basis, wedge_name
from linalg.rank import evaluate_matrix_mod, rank_mod_p

logger = logging.getLogger(__name__)

CONCLUSION_CONFIRMS = "confirms"
CONCLUSION_EVIDENCE = "evidence"
CONCLUSION_INCOMPLETE = "incomplete"


def multigraded_obstruction(n: int, i: int) -> bool:
    """True when the numerical condition for a multigraded sequence holds"""
    if not 2 <= i <= n - 1:
        raise RangeError(f"need 2 <= i <= n-1, got n={n}, i={i}")
    first = i * comb(n - 1, i - 1) - n * comb(n - 1, i - 2)
    second = (n - i) * comb(n - 1, i) - n * comb(n - 1, i + 1)
    return i >= max(first, second)


def _known_answer(n: int, i: int) -> Optional[bool]:
    """Whether a multigraded sequence exists, where this is settled"""
    if i >= n - 2:
        return True
    if not multigraded_obstruction(n, i):
        return False
    if (n, i) == (6, 3):
        return False
    return None


@dataclass
class MultigradedReport:
    n: int
    i: int
    subset_size: int
    budget: int
    leaves_examined: int = 0
    passing_count: int = 0
    failing_count: int = 0
    complete: bool = True
    passing: List[List[WedgeIndex]] = field(default_factory=list)
    verified: List[bool] = field(default_factory=list)
    obstruction_holds: bool = True
    known_answer: Optional[bool] = None

    @property
    def conclusion(self) -> str:
        if not self.complete:
            return CONCLUSION_INCOMPLETE
        found = self.passing_count > 0
        if self.known_answer is not None and found == self.known_answer:
            return CONCLUSION_CONFIRMS
        return CONCLUSION_EVIDENCE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "i": self.i,
            "subset_size": self.subset_size,
            "budget": self.budget,
            "leaves_examined": self.leaves_examined,
            "passing_count": self.passing_count,
            "failing_count": self.failing_count,
            "complete": self.complete,
            "unexplored": not self.complete,
            "passing": [[wedge_name(s) for s in subset] for subset in self.passing],
            "passing_verified": self.verified,
            "obstruction_holds": self.obstruction_holds,
            "proven_range": self.known_answer is not None,
            "conclusion": self.conclusion
        }


def sibling_pruned_subsets(n: int, i: int, size: int) -> Iterator[Tuple[int, ...]]:
    """
    Subsets of the K_i basis (indices into the colex basis) of the given size
    that contain at most i-1 of the i+1 faces of any (i+1)-subset of [n]

    If i faces of T were chosen, they would become dependent modulo the
    variable of T they all contain, so every maximal minor would be
    divisible by it.
    """
    basis = wedge_basis(n, i)
    cofaces: List[List[WedgeIndex]] = [
        [tuple(sorted(s + (t,))) for t in range(1, n + 1) if t not in s] for s in basis
    ]
    counts: Dict[WedgeIndex, int] = {}
    chosen: List[int] = []
    limit = i - 1

    def extend(start: int) -> Iterator[Tuple[int, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        remaining = size - len(chosen)
        for idx in range(start, len(basis) - remaining + 1):
            touched = cofaces[idx]
            if any(counts.get(T, 0) >= limit for T in touched):
                continue
            for T in touched:
                counts[T] = counts.get(T, 0) + 1
            chosen.append(idx)
            yield from extend(idx + 1)
            chosen.pop()
            for T in touched:
                counts[T] -= 1

    yield from extend(0)


@lru_cache(maxsize=8)
def _evaluations(n: int, i: int) -> Tuple[np.ndarray, ...]:
    """d_i at a point with all coordinates nonzero, then with x_k = 0 for each k"""
    rng = np.random.default_rng(settings.EVALUATION_SEED)
    prime = settings.MODULAR_PRIME
    d = differential(n, i).matrix
    base = [int(v) for v in rng.integers(1, prime, size=n)]
    points = [base]
    for k in range(n):
        point = list(base)
        point[k] = 0
        points.append(point)
    return tuple(evaluate_matrix_mod(d, point, prime) for point in points)


def _leaf_passes(n: int, i: int, subset: Sequence[int]) -> bool:
    target = len(subset)
    for values in _evaluations(n, i):
        if rank_mod_p(values[:, list(subset)]) < target:
            return False
    return True


def _evaluate_batch(job: Tuple[int, int, List[Tuple[int, ...]]]) -> List[bool]:
    n, i, subsets = job
    return [_leaf_passes(n, i, subset) for subset in subsets]


def multigraded_exhaustive_search(n: int, i: int, budget: Optional[int] = None) -> MultigradedReport:
    """Test every sibling-pruned basis subset of size rank(Z_i) - 1, up to budget leaves"""
    if not 2 <= i <= n - 1:
        raise RangeError(f"need 2 <= i <= n-1, got n={n}, i={i}")
    budget = settings.MULTIGRADED_BUDGET if budget is None else budget
    size = comb(n - 1, i - 1) - 1
    report = MultigradedReport(
        n=n,
        i=i,
        subset_size=size,
        budget=budget,
        obstruction_holds=multigraded_obstruction(n, i),
        known_answer=_known_answer(n, i)
    )
    logger.info(f"Multigraded search n={n}, i={i}: subsets of size {size}, budget {budget}")

    basis = wedge_basis(n, i)
    passing: List[Tuple[int, ...]] = []
    batch: List[Tuple[int, ...]] = []

    def flush() -> None:
        if not batch:
            return
        step = max(1, -(-len(batch) // get_worker_count()))
        chunks = [batch[k:k + step] for k in range(0, len(batch), step)]
        results = parallel_map(_evaluate_batch, [(n, i, chunk) for chunk in chunks])
        for chunk, outcomes in zip(chunks, results):
            for subset, ok in zip(chunk, outcomes):
                if ok:
                    report.passing_count += 1
                    if len(passing) < settings.PASSING_SUBSETS_KEPT:
                        passing.append(subset)
                else:
                    report.failing_count += 1
        batch.clear()

    for subset in sibling_pruned_subsets(n, i, size):
        if report.leaves_examined >= budget:
            report.complete = False
            break
        report.leaves_examined += 1
        batch.append(subset)
        if len(batch) >= settings.MULTIGRADED_BATCH:
            flush()
    flush()

    d = differential(n, i)
    for subset in passing:
        labels = [basis[idx] for idx in subset]
        map_matrix = restrict_map(d, [{label: Fraction(1)} for label in labels], names=labels)
        report.passing.append(labels)
        report.verified.append(check_bourbaki_map(map_matrix, size).verdict)

    status = "✅" if report.conclusion == CONCLUSION_CONFIRMS else "⚠️"
    logger.info(
        f"{status} Multigraded search n={n}, i={i}: {report.leaves_examined} leaves, "
        f"{report.passing_count} passing, conclusion {report.conclusion}"
    )
    return report
