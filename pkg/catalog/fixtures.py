"""
Expected ideals and matrices for the catalog constructions

Fixtures are stored as polynomial strings and compared after canonical
normalization.
"""

from typing import List, Optional, Tuple

from algebra.polynomial import Polynomial
from bourbaki.models import IdealGens
from linalg.matrix import PolyMatrix

# Z_2 for n = 5
Z2_N5_GENERATORS = [
    "x2*x3*x4",
    "x1*x3*x4 + x3^2*x4",
    "x1*x2*x4 + x1*x4^2 + x3*x4^2",
    "x1*x2*x3 + x1*x2*x5 + x1*x4*x5 + x3*x4*x5",
    "x2^2*x4 + x2*x4^2",
    "x2^2*x3 + x2^2*x5 + x2*x4*x5",
    "x2*x3^2 + x2*x3*x5"
]

# Z_3 for n = 6: rows are the K_4 basis in lex order, columns the classes
# e124 (the chain), e123, e125, e136, e145, e146, e234, e246, e256, e345, e356
N6Z3_B_TRANSPOSE = [
    ["-x2 + x3", "-x4", "0", "0", "0", "0", "x1", "0", "0", "0", "0"],
    ["x1 - x2", "-x5", "x3", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["x1 + x3", "-x6", "0", "-x2", "0", "0", "0", "0", "0", "0", "0"],
    ["x1 - x5", "0", "x4", "0", "-x2", "0", "0", "0", "0", "0", "0"],
    ["x4 - x6", "0", "0", "0", "0", "-x2", "0", "x1", "0", "0", "0"],
    ["-x2 + x5", "0", "-x6", "0", "0", "0", "0", "0", "x1", "0", "0"],
    ["x4 - x5", "0", "0", "0", "-x3", "0", "0", "0", "0", "x1", "0"],
    ["x1 - x6", "0", "0", "x4", "0", "-x3", "0", "0", "0", "0", "0"],
    ["-x3 - x6", "0", "0", "x5", "0", "0", "0", "0", "0", "0", "x1"],
    ["x1 - x4", "0", "0", "0", "-x6", "x5", "0", "0", "0", "0", "0"],
    ["-x3 + x4", "0", "0", "0", "0", "0", "-x5", "0", "0", "x2", "0"],
    ["x2 + x4", "0", "0", "0", "0", "0", "-x6", "-x3", "0", "0", "0"],
    ["x5 - x6", "0", "0", "0", "0", "0", "0", "0", "-x3", "0", "x2"],
    ["x2 - x6", "0", "0", "0", "0", "0", "0", "x5", "-x4", "0", "0"],
    ["x3 + x5", "0", "0", "0", "0", "0", "0", "0", "0", "-x6", "-x4"]
]

N6Z3_CHAIN = [
    (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6)
]

N6Z3_ROWS = [
    (1, 2, 4), (1, 2, 3), (1, 2, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6),
    (2, 3, 4), (2, 4, 6), (2, 5, 6), (3, 4, 5), (3, 5, 6)
]

N6Z3_BAD_BASIS = [
    (1, 2, 6), (2, 3, 6), (3, 4, 6), (4, 5, 6), (1, 5, 6),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5)
]


def circular_pairs(n: int) -> List[Tuple[int, int]]:
    """(1,2), (2,3), ..., (n-1,n), (1,n)"""
    return [(k, k + 1) for k in range(1, n)] + [(1, n)]


def z_top_expected(n: int, i: int, j: int, twist: Optional[int] = None) -> IdealGens:
    return IdealGens([Polynomial.variable(n, i), Polynomial.variable(n, j)], twist=twist)


def z_nminus2_expected(n: int) -> IdealGens:
    gens = []
    for a, b in circular_pairs(n):
        exps = [1] * n
        exps[a - 1] = 0
        exps[b - 1] = 0
        gens.append(Polynomial.monomial(n, exps))
    return IdealGens(gens)


def z_nminus2_witness(n: int) -> Polynomial:
    """x1^C(n-2,2) * x2 * ... * x_{n-2}"""
    exps = [0] * n
    exps[0] = (n - 2) * (n - 3) // 2
    for k in range(2, n - 1):
        exps[k - 1] += 1
    return Polynomial.monomial(n, exps)


def z2_divisor(n: int) -> Polynomial:
    """prod_{i=2}^{n-2} x_i^(n-1-i)"""
    exps = [0] * n
    for k in range(2, n - 1):
        exps[k - 1] = n - 1 - k
    return Polynomial.monomial(n, exps)


def z2_expected(n: int) -> Optional[IdealGens]:
    if n == 5:
        return IdealGens.parse(Z2_N5_GENERATORS, 5)
    if n == 3:
        return IdealGens.parse(["x2", "x1 + x3"], 3)
    return None


def n6z3_b_transpose() -> PolyMatrix:
    return PolyMatrix.from_strings(N6Z3_B_TRANSPOSE, 6)
