"""
Bourbaki numbers and Hilbert coefficients
"""

from math import comb
from typing import Sequence, Tuple

from core.exceptions import RangeError
from koszul.complex import GradedTwists, cycle_rank, truncated_resolution

from .models import GradedModuleData


def bourbaki_number(k: int, r: int, e1: int) -> int:
    """Twist m of 0 -> S(-k)^(r-1) -> M -> I(m) -> 0"""
    if r < 1:
        raise RangeError(f"rank must be at least 1, got {r}")
    return k * (r - 1) - e1


def e1_from_resolution(res: GradedTwists) -> int:
    return sum((-1) ** degree * sum(twists) for degree, twists in res.twists.items())


def hilbert_burch(a_twists: Sequence[int], b_twists: Sequence[int], k: int) -> Tuple[int, GradedTwists]:
    """Twist and resolution shape of the Bourbaki ideal of a module of projective dimension one"""
    alpha = len(a_twists)
    beta = len(b_twists)
    if alpha <= beta + 1:
        raise RangeError(f"need alpha - beta >= 2, got alpha={alpha}, beta={beta}")
    extra = alpha - beta - 1
    m = sum(b_twists) - sum(a_twists) + k * extra
    shape = GradedTwists({0: list(a_twists), 1: list(b_twists) + [k] * extra})
    return m, shape


def cycle_module_data(n: int, i: int) -> GradedModuleData:
    """Z_i with k = i, r = C(n-1, i-1) and its truncated Koszul resolution"""
    res = truncated_resolution(n, i)
    return GradedModuleData(n=n, k=i, r=cycle_rank(n, i), e1=e1_from_resolution(res), resolution=res)


def cycle_bourbaki_number(n: int, i: int) -> int:
    """m_i = i C(n-1, i-1) - n C(n-2, i-2) - i"""
    if not 2 <= i <= n - 1:
        raise RangeError(f"need 2 <= i <= n-1, got n={n}, i={i}")
    return i * comb(n - 1, i - 1) - n * comb(n - 2, i - 2) - i
