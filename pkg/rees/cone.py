"""
The cone spanned by the Rees semigroup

Its lattice points are the vectors a in Z^(n+1) with
  a_k >= 0 for every k,
  a_{i_1} + ... + a_{i_l} >= (l-1) a_{n+1} for every cycle-independent set,
  a_1 + ... + a_n >= (n-2) a_{n+1}.
"""

import logging
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from core.exceptions import DimensionMismatchError, RangeError

logger = logging.getLogger(__name__)


class ConeStatus(Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


def cycle_independent_sets(n: int, l: int) -> List[Tuple[int, ...]]:
    """l-subsets of 1..n with no two elements circularly adjacent"""
    if not 2 <= l <= n // 2:
        raise RangeError(f"need 2 <= l <= {n // 2}, got l={l}")
    found = []
    for subset in combinations(range(1, n + 1), l):
        gaps_ok = all(b - a >= 2 for a, b in zip(subset, subset[1:]))
        if gaps_ok and subset[-1] - subset[0] <= n - 2:
            found.append(subset)
    return found


@lru_cache(maxsize=16)
def cone_inequalities(n: int) -> np.ndarray:
    """Rows g with g . a >= 0 describing the cone, as an int64 matrix"""
    rows = []
    for k in range(n + 1):
        row = [0] * (n + 1)
        row[k] = 1
        rows.append(row)
    for l in range(2, n // 2 + 1):
        for subset in cycle_independent_sets(n, l):
            row = [0] * (n + 1)
            for i in subset:
                row[i - 1] = 1
            row[n] = -(l - 1)
            rows.append(row)
    rows.append([1] * n + [-(n - 2)])
    G = np.array(rows, dtype=np.int64)
    G.setflags(write=False)
    return G


def cone_membership(a: Sequence[int], n: int) -> ConeStatus:
    if len(a) != n + 1:
        raise DimensionMismatchError(f"lattice vector has {len(a)} coordinates, expected {n + 1}")
    values = cone_inequalities(n) @ np.array(a, dtype=np.int64)
    if (values < 0).any():
        return ConeStatus.OUTSIDE
    if (values > 0).all():
        return ConeStatus.INTERIOR
    return ConeStatus.BOUNDARY


@lru_cache(maxsize=4)
def _window_tail(n: int, t_max: int, box: int) -> np.ndarray:
    ranges = [np.arange(box + 1)] * (n - 2) + [np.arange(t_max + 1)]
    mesh = np.meshgrid(*ranges, indexing="ij")
    tail = np.stack([m.ravel() for m in mesh], axis=1).astype(np.int64)
    tail.setflags(write=False)
    return tail


def window_chunk(n: int, t_max: int, box: int, a1: int, a2: int) -> np.ndarray:
    """All window points with a_1 = a1 and a_2 = a2"""
    tail = _window_tail(n, t_max, box)
    head = np.empty((tail.shape[0], 2), dtype=np.int64)
    head[:, 0] = a1
    head[:, 1] = a2
    return np.hstack([head, tail])


def enumerate_window(n: int, t_max: int, box: int) -> Iterator[np.ndarray]:
    """Chunks covering 0 <= a_i <= box, 0 <= a_{n+1} <= t_max"""
    for a1 in range(box + 1):
        for a2 in range(box + 1):
            yield window_chunk(n, t_max, box, a1, a2)
