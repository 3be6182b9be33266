"""
The affine semigroup of the Rees algebra

For the ideal generated by x/(x_j x_{j+1}) over circular pairs, the Rees
algebra is the semigroup ring of C, generated in Z^(n+1) by the unit
vectors e_1..e_n and the vectors f_j (exponents of x t / (x_j x_{j+1})).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.exceptions import DimensionMismatchError, RangeError

logger = logging.getLogger(__name__)

LatticeVector = Tuple[int, ...]


def succ(j: int, n: int) -> int:
    return 1 if j == n else j + 1


def pred(j: int, n: int) -> int:
    return n if j == 1 else j - 1


def semigroup_generators(n: int) -> Tuple[List[LatticeVector], List[LatticeVector]]:
    """(e_1..e_n, f_1..f_n) as vectors of length n+1"""
    if n < 3:
        raise RangeError(f"the Rees semigroup needs n >= 3, got {n}")
    e = []
    f = []
    for j in range(1, n + 1):
        unit = [0] * (n + 1)
        unit[j - 1] = 1
        e.append(tuple(unit))
        ones = [1] * n + [1]
        ones[j - 1] = 0
        ones[succ(j, n) - 1] = 0
        f.append(tuple(ones))
    return e, f


def f1_vector(n: int) -> LatticeVector:
    """(1, ..., 1)"""
    return (1,) * (n + 1)


def f2_vector(n: int) -> LatticeVector:
    """(k, ..., k, k+1) for n = 2k+1"""
    k = (n - 1) // 2
    return (k,) * n + (k + 1,)


@dataclass(frozen=True)
class SemigroupDecomposition:
    """a = sum r_i e_i + sum s_j f_j"""

    r: Tuple[int, ...]
    s: Tuple[int, ...]

    def reconstruct(self) -> LatticeVector:
        n = len(self.r)
        total = sum(self.s)
        coords = []
        for i in range(1, n + 1):
            # f_j covers i unless j is i or its predecessor
            covered = total - self.s[i - 1] - self.s[pred(i, n) - 1]
            coords.append(self.r[i - 1] + covered)
        return tuple(coords) + (total,)

    def to_dict(self) -> Dict[str, Any]:
        return {"r": list(self.r), "s": list(self.s)}


def semigroup_membership(a: Sequence[int], n: int) -> Optional[SemigroupDecomposition]:
    """
    Decomposition of a in C, or None

    Looks for s >= 0 with sum s = t = a_{n+1} and s_{pred(i)} + s_i >= t - a_i
    for every circular position i; r is then forced. Larger values are
    tried first, s_1 before s_2 and so on, which fixes the answer.
    """
    if len(a) != n + 1:
        raise DimensionMismatchError(f"lattice vector has {len(a)} coordinates, expected {n + 1}")
    a = tuple(int(v) for v in a)
    if any(v < 0 for v in a):
        return None
    t = a[n]
    need = [t - a[i] for i in range(n)]  # need[i-1] bounds s_{pred(i)} + s_i

    for s1 in range(t, -1, -1):

        @lru_cache(maxsize=None)
        def solve(i: int, previous: int, remaining: int) -> Optional[Tuple[int, ...]]:
            if i == n:
                last = remaining
                if previous + last >= need[n - 1] and last + s1 >= need[0]:
                    return (last,)
                return None
            for value in range(remaining, -1, -1):
                if previous + value < need[i - 1]:
                    break
                rest = solve(i + 1, value, remaining - value)
                if rest is not None:
                    return (value,) + rest
            return None

        tail = solve(2, s1, t - s1) if n >= 2 else ()
        if tail is None:
            continue
        s = (s1,) + tail
        r = tuple(a[i] - (t - s[i] - s[pred(i + 1, n) - 1]) for i in range(n))
        return SemigroupDecomposition(r=r, s=s)
    return None


def in_semigroup(a: Sequence[int], n: int) -> bool:
    return semigroup_membership(a, n) is not None
