"""
Bounded normality and canonical-module checks for the Rees semigroup

All checks run over the window 0 <= a_i <= box, 0 <= a_{n+1} <= t_max,
sharded by the first two coordinates. Both the semigroup and the cone are
closed under adding e_1..e_n, so normality only needs the cone points that
stop being cone points when any positive coordinate a_i (i <= n) drops.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import settings
from core.exceptions import DimensionMismatchError, RangeError
from core.workers import get_worker_count, parallel_map

from .cone import ConeStatus, cone_inequalities, cone_membership, window_chunk
from .semigroup import LatticeVector, f1_vector, f2_vector, in_semigroup, semigroup_generators

logger = logging.getLogger(__name__)

GORENSTEIN = "Gorenstein"
TYPE_TWO = "type_two"
INCONCLUSIVE = "inconclusive"


def _window(n: int, t_max: Optional[int], box: Optional[int]) -> Tuple[int, int]:
    if n < 3:
        raise RangeError(f"the Rees semigroup needs n >= 3, got {n}")
    t_max = settings.REES_T_MAX if t_max is None else t_max
    box = n * t_max if box is None else box
    if t_max < 0 or box < 0:
        raise RangeError(f"window bounds must be nonnegative, got t_max={t_max}, box={box}")
    return t_max, box


def _reference_points(n: int) -> List[LatticeVector]:
    points = [f1_vector(n)]
    if n % 2 == 1:
        points.append(f2_vector(n))
    return points


def _scan_normality(n: int, points: np.ndarray, values: np.ndarray, contains: np.ndarray) -> Dict[str, Any]:
    in_cone = (values >= 0).all(axis=1)
    tight = (values == 0).astype(np.int64) @ contains > 0
    minimal = in_cone & ((points[:, :n] == 0) | tight).all(axis=1)
    counterexamples = []
    for row in points[minimal]:
        a = tuple(int(v) for v in row)
        if not in_semigroup(a, n):
            counterexamples.append(a)
    return {
        "in_cone": int(in_cone.sum()),
        "minimal": int(minimal.sum()),
        "counterexamples": counterexamples
    }


def _scan_canonical(n: int, points: np.ndarray, values: np.ndarray, contains: np.ndarray) -> Dict[str, Any]:
    G = cone_inequalities(n)
    interior = (values > 0).all(axis=1)
    # dropping e_i leaves the interior when some row through i sits at 1
    edge = (values == 1).astype(np.int64) @ contains > 0
    candidates = interior & ((points[:, :n] == 0) | edge).all(axis=1)
    _, f = semigroup_generators(n)
    for f_j in f:
        shifted = values - G @ np.array(f_j, dtype=np.int64)
        candidates &= ~(shifted > 0).all(axis=1)
    return {
        "interior": int(interior.sum()),
        "candidates": [tuple(int(v) for v in row) for row in points[candidates]]
    }


def _scan_reduction(n: int, points: np.ndarray, values: np.ndarray, contains: np.ndarray) -> Dict[str, Any]:
    G = cone_inequalities(n)
    interior = (values > 0).all(axis=1)
    reducible = np.zeros(len(points), dtype=bool)
    for reference in _reference_points(n):
        shifted = values - G @ np.array(reference, dtype=np.int64)
        reducible |= (shifted >= 0).all(axis=1)
    violations = interior & ~reducible
    return {
        "interior": int(interior.sum()),
        "violations": [tuple(int(v) for v in row) for row in points[violations]]
    }


_SCANS = {
    "normality": _scan_normality,
    "canonical": _scan_canonical,
    "reduction": _scan_reduction
}


def _scan_prefixes(job: Tuple[str, int, int, int, List[Tuple[int, int]]]) -> List[Dict[str, Any]]:
    mode, n, t_max, box, prefixes = job
    scan = _SCANS[mode]
    G = cone_inequalities(n)
    contains = (G[:, :n] > 0).astype(np.int64)
    results = []
    for a1, a2 in prefixes:
        points = window_chunk(n, t_max, box, a1, a2)
        values = points @ G.T
        result = scan(n, points, values, contains)
        result["points"] = len(points)
        results.append(result)
    return results


def _run_scan(mode: str, n: int, t_max: int, box: int) -> List[Dict[str, Any]]:
    prefixes = [(a1, a2) for a1 in range(box + 1) for a2 in range(box + 1)]
    step = max(1, -(-len(prefixes) // get_worker_count()))
    jobs = [(mode, n, t_max, box, prefixes[k:k + step]) for k in range(0, len(prefixes), step)]
    merged = []
    for results in parallel_map(_scan_prefixes, jobs):
        merged.extend(results)
    return merged


@dataclass
class NormalityReport:
    n: int
    t_max: int
    box: int
    points: int = 0
    in_cone: int = 0
    minimal_checked: int = 0
    counterexamples: List[LatticeVector] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "t_max": self.t_max,
            "box": self.box,
            "points": self.points,
            "in_cone": self.in_cone,
            "minimal_checked": self.minimal_checked,
            "counterexamples": [list(a) for a in self.counterexamples],
            "verdict": self.verdict
        }


def normality_check(n: int, t_max: Optional[int] = None, box: Optional[int] = None) -> NormalityReport:
    """Every cone point of the window decomposes in the semigroup"""
    t_max, box = _window(n, t_max, box)
    logger.info(f"Normality check n={n}, t_max={t_max}, box={box}")
    report = NormalityReport(n=n, t_max=t_max, box=box)
    for result in _run_scan("normality", n, t_max, box):
        report.points += result["points"]
        report.in_cone += result["in_cone"]
        report.minimal_checked += result["minimal"]
        report.counterexamples.extend(result["counterexamples"])
    report.counterexamples.sort()

    status = "✅" if report.verdict else "❌"
    logger.info(
        f"{status} Normality n={n}: {report.in_cone} cone points, {report.minimal_checked} checked, "
        f"{len(report.counterexamples)} counterexamples"
    )
    return report


@dataclass
class CanonicalReport:
    n: int
    t_max: int
    box: int
    generators: List[LatticeVector]
    classification: str
    interior_points: int = 0
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "t_max": self.t_max,
            "box": self.box,
            "generators": [list(g) for g in self.generators],
            "classification": self.classification,
            "interior_points": self.interior_points,
            "reason": self.reason
        }


def _pairwise_minimal(candidates: List[LatticeVector], n: int) -> List[LatticeVector]:
    minimal = []
    for p in candidates:
        above = any(
            q != p and in_semigroup(tuple(a - b for a, b in zip(p, q)), n)
            for q in candidates
        )
        if not above:
            minimal.append(p)
    return minimal


def canonical_generators(n: int, t_max: Optional[int] = None, box: Optional[int] = None) -> CanonicalReport:
    """Minimal interior points of the window and the Gorenstein or type-two classification"""
    t_max, box = _window(n, t_max, box)
    logger.info(f"Canonical module generators n={n}, t_max={t_max}, box={box}")
    interior = 0
    candidates: List[LatticeVector] = []
    for result in _run_scan("canonical", n, t_max, box):
        interior += result["interior"]
        candidates.extend(result["candidates"])
    generators = sorted(_pairwise_minimal(sorted(candidates), n))

    expected = sorted(_reference_points(n))
    if t_max < -(-n // 2):
        classification, reason = INCONCLUSIVE, f"t_max={t_max} is below {-(-n // 2)}"
    elif any(max(g[:n]) >= box for g in generators):
        classification, reason = INCONCLUSIVE, "a minimal point touches the box"
    elif generators == expected:
        classification = GORENSTEIN if len(generators) == 1 else TYPE_TWO
        reason = f"{len(generators)} minimal interior point(s)"
    else:
        classification, reason = INCONCLUSIVE, "minimal points differ from the expected pattern"

    report = CanonicalReport(
        n=n,
        t_max=t_max,
        box=box,
        generators=generators,
        classification=classification,
        interior_points=interior,
        reason=reason
    )
    status = "✅" if classification != INCONCLUSIVE else "⚠️"
    logger.info(f"{status} Canonical module n={n}: {len(generators)} generators, {classification}")
    return report


@dataclass
class ReductionReport:
    n: int
    t_max: int
    box: int
    interior_points: int = 0
    violations: List[LatticeVector] = field(default_factory=list)
    normality_verified: bool = False

    @property
    def verdict(self) -> bool:
        return not self.violations and self.normality_verified

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "t_max": self.t_max,
            "box": self.box,
            "interior_points": self.interior_points,
            "violations": [list(a) for a in self.violations],
            "normality_verified": self.normality_verified,
            "verdict": self.verdict
        }


def interior_reduction_check(n: int, t_max: Optional[int] = None, box: Optional[int] = None) -> ReductionReport:
    """
    Every interior point F of the window has F - F1 in the semigroup, or
    F - F2 for odd n

    Differences are tested against the cone; the normality check over the
    same window turns that into semigroup membership.
    """
    t_max, box = _window(n, t_max, box)
    logger.info(f"Interior reduction check n={n}, t_max={t_max}, box={box}")
    report = ReductionReport(n=n, t_max=t_max, box=box)
    for result in _run_scan("reduction", n, t_max, box):
        report.interior_points += result["interior"]
        report.violations.extend(result["violations"])
    report.violations.sort()
    report.normality_verified = normality_check(n, t_max, box).verdict

    status = "✅" if report.verdict else "❌"
    logger.info(
        f"{status} Interior reduction n={n}: {report.interior_points} interior points, "
        f"{len(report.violations)} violations"
    )
    return report


def reduce_interior_point(F: Sequence[int], n: int) -> Optional[str]:
    """Name of the reference point F reduces by ("F1" or "F2"), or None"""
    if len(F) != n + 1:
        raise DimensionMismatchError(f"lattice vector has {len(F)} coordinates, expected {n + 1}")
    if cone_membership(F, n) is not ConeStatus.INTERIOR:
        raise RangeError(f"{tuple(F)} is not an interior point")
    for name, reference in zip(("F1", "F2"), _reference_points(n)):
        if in_semigroup(tuple(a - b for a, b in zip(F, reference)), n):
            return name
    return None
