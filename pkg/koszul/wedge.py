"""
Wedge bases of the exterior powers K_k = /\\^k S^n

A WedgeIndex is a strictly increasing tuple of 1-based indices. Bases
are listed in colexicographic order.
"""

from typing import Iterable, List, Sequence, Tuple

from core.exceptions import InvalidLabelError, RangeError
from linalg.minors import colex_combinations

WedgeIndex = Tuple[int, ...]


def wedge_basis(n: int, k: int) -> List[WedgeIndex]:
    """Basis of K_k in colex order"""
    if not 0 <= k <= n:
        raise RangeError(f"exterior power {k} does not exist for n={n}")
    return [tuple(e + 1 for e in subset) for subset in colex_combinations(n, k)]


def lex_wedge_basis(n: int, k: int) -> List[WedgeIndex]:
    return sorted(wedge_basis(n, k))


def validate_wedge(s: Sequence[int], n: int) -> WedgeIndex:
    s = tuple(int(e) for e in s)
    if any(a >= b for a, b in zip(s, s[1:])) or any(not 1 <= e <= n for e in s):
        raise InvalidLabelError(f"{list(s)} is not a strictly increasing subset of 1..{n}")
    return s


def parse_wedge(text: str, n: int) -> WedgeIndex:
    """'e124' or '124' to (1, 2, 4); single digits only"""
    digits = text[1:] if text.startswith("e") else text
    if not digits.isdigit():
        raise InvalidLabelError(f"cannot read wedge label {text!r}")
    return validate_wedge([int(d) for d in digits], n)


def wedge_name(s: WedgeIndex) -> str:
    return "e" + "".join(str(e) for e in s) if max(s, default=0) < 10 else "e" + "_".join(str(e) for e in s)


def permutation_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inversions % 2 else 1


def hat_index(s: Sequence[int], n: int) -> Tuple[WedgeIndex, int]:
    """Complement c and sign with e_s /\\ (sign * e_c) = e_{1..n}"""
    s = validate_wedge(s, n)
    complement = tuple(k for k in range(1, n + 1) if k not in s)
    return complement, permutation_sign(s + complement)


def multidegree(s: Iterable[int], n: int) -> Tuple[int, ...]:
    degree = [0] * n
    for e in s:
        degree[e - 1] += 1
    return tuple(degree)
