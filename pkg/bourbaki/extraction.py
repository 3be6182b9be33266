"""
Bourbaki ideals from presentation matrices

For a presentation B of a rank-one torsion-free module on alpha
generators, any alpha x (alpha-1) submatrix C of full rank gives the
ideal (1/g) I_{alpha-1}(C), g the gcd of the signed maximal minors.
"""

import logging
from typing import List, Optional, Tuple

from algebra.gcd import gcd_of_list
from algebra.polynomial import Polynomial
from core.exceptions import NonMonomialError, ShapeError
from linalg.matrix import PolyMatrix
from linalg.minors import select_full_rank_submatrix, signed_maximal_minors

from .models import Extraction, IdealGens

logger = logging.getLogger(__name__)


def extraction_details(B: PolyMatrix, C: Optional[PolyMatrix] = None) -> Extraction:
    """Extraction keeping the submatrix, the signed minors and their gcd"""
    alpha = B.rows
    if alpha < 2:
        raise ShapeError(f"presentation needs at least 2 rows, got {alpha}")
    if C is None:
        C = select_full_rank_submatrix(B, alpha - 1)
    elif C.shape != (alpha, alpha - 1):
        raise ShapeError(f"chosen submatrix must be {alpha}x{alpha - 1}, got {C.rows}x{C.cols}")

    minors = signed_maximal_minors(C)
    divisor = gcd_of_list(minors)
    if divisor.is_zero:
        raise ShapeError("chosen submatrix is not of full rank")
    ideal = IdealGens([f.exact_div(divisor) for f in minors])
    logger.info(f"✅ Extracted {len(ideal)} generators from a {B.rows}x{B.cols} presentation, divisor {divisor}")
    return Extraction(ideal=ideal, divisor=divisor, submatrix=C, minors=minors)


def extract_bourbaki_ideal(B: PolyMatrix) -> Tuple[IdealGens, Polynomial]:
    result = extraction_details(B)
    return result.ideal, result.divisor


def taylor_presentation(monomial_gens: IdealGens) -> PolyMatrix:
    """Pairwise syzygies (lcm/m_i) e_i - (lcm/m_j) e_j of a monomial ideal"""
    gens = monomial_gens.gens
    if not gens:
        raise ShapeError("taylor presentation needs at least one generator")
    if not all(p.is_monomial() for p in gens):
        raise NonMonomialError("taylor presentation needs monomial generators")

    n = gens[0].n
    exps = [p.leading_exponent() for p in gens]
    zero = Polynomial.zero(n)
    columns: List[List[Polynomial]] = []
    labels = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            lcm = tuple(max(a, b) for a, b in zip(exps[i], exps[j]))
            column = [zero] * len(gens)
            column[i] = Polynomial.monomial(n, [a - b for a, b in zip(lcm, exps[i])])
            column[j] = -Polynomial.monomial(n, [a - b for a, b in zip(lcm, exps[j])])
            columns.append(column)
            labels.append(f"s{i + 1}_{j + 1}")
    return PolyMatrix.from_columns(
        columns,
        len(gens),
        n,
        row_labels=[str(p) for p in gens],
        col_labels=labels
    )
