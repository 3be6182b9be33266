"""
The Koszul complex on x1, ..., xn

Differentials follow d(e_s) = sum_p (-1)^p x_{s[p]} e_{s without s[p]}
with p counted from zero. The cycle module Z_i is handled through the
matrix of d_i, whose image it is, and through the presentation
Z_i = K_i / im d_{i+1}.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from algebra.polynomial import Polynomial
from core.exceptions import InvalidLabelError, RangeError, RankDeficiencyError
from linalg.matrix import PolyMatrix
from linalg.rank import row_echelon

from .wedge import WedgeIndex, multidegree, validate_wedge, wedge_basis

logger = logging.getLogger(__name__)

Combination = Mapping[WedgeIndex, Union[int, Fraction]]


@dataclass
class GradedTwists:
    """Graded free modules by homological degree: degree -> list of twists j (one per S(-j))"""

    twists: Dict[int, List[int]] = field(default_factory=dict)

    def add(self, degree: int, twist: int, multiplicity: int = 1) -> None:
        if multiplicity <= 0:
            return
        self.twists.setdefault(degree, []).extend([twist] * multiplicity)

    def rank(self, degree: int) -> int:
        return len(self.twists.get(degree, []))

    def betti(self) -> Dict[int, Dict[int, int]]:
        table: Dict[int, Dict[int, int]] = {}
        for degree, twists in sorted(self.twists.items()):
            row = table.setdefault(degree, {})
            for j in twists:
                row[j] = row.get(j, 0) + 1
        return table

    def to_dict(self) -> Dict[str, Any]:
        return {str(degree): sorted(twists) for degree, twists in sorted(self.twists.items())}


@dataclass
class KoszulMap:
    n: int
    k: int
    matrix: PolyMatrix

    @property
    def row_labels(self) -> Tuple[WedgeIndex, ...]:
        return self.matrix.row_labels

    @property
    def col_labels(self) -> Tuple[WedgeIndex, ...]:
        return self.matrix.col_labels

    def row_degrees(self) -> List[Tuple[int, ...]]:
        return [multidegree(s, self.n) for s in self.row_labels]

    def col_degrees(self) -> List[Tuple[int, ...]]:
        return [multidegree(s, self.n) for s in self.col_labels]

    def column_of(self, label: Sequence[int]) -> Tuple[Polynomial, ...]:
        return self.matrix.column(self.matrix.col_index(tuple(label)))

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "matrix": self.matrix.to_dict()}


def differential(n: int, k: int) -> KoszulMap:
    """Matrix of d_k: K_k -> K_{k-1} in colex bases"""
    if not 1 <= k <= n:
        raise RangeError(f"differential d_{k} does not exist for n={n}")
    rows = wedge_basis(n, k - 1)
    cols = wedge_basis(n, k)
    row_at = {s: idx for idx, s in enumerate(rows)}
    zero = Polynomial.zero(n)
    grid = [[zero] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for p, var in enumerate(s):
            face = s[:p] + s[p + 1:]
            x = Polynomial.variable(n, var)
            grid[row_at[face]][j] = -x if p % 2 else x
    matrix = PolyMatrix(grid, n=n, cols=len(cols), row_labels=rows, col_labels=cols)
    return KoszulMap(n=n, k=k, matrix=matrix)


def cycle_rank(n: int, i: int) -> int:
    """Rank of Z_i"""
    if not 1 <= i <= n:
        raise RangeError(f"Z_{i} does not exist for n={n}")
    return comb(n - 1, i - 1)


def e1_of_cycle(n: int, i: int) -> int:
    if not 2 <= i <= n - 1:
        raise RangeError(f"e1(Z_{i}) needs 2 <= i <= n-1, got n={n}")
    return n * comb(n - 2, i - 2)


def truncated_resolution(n: int, i: int) -> GradedTwists:
    """0 -> K_n -> ... -> K_{i+1} -> K_i -> Z_i -> 0 as graded twists"""
    if not 1 <= i <= n:
        raise RangeError(f"Z_{i} does not exist for n={n}")
    res = GradedTwists()
    for j in range(0, n - i + 1):
        res.add(j, i + j, comb(n, i + j))
    return res


def _combination_column(d: KoszulMap, combo: Combination) -> List[Polynomial]:
    column = [Polynomial.zero(d.n)] * d.matrix.rows
    for label, coeff in combo.items():
        label = tuple(label)
        if d.col_labels is None or label not in d.col_labels:
            raise InvalidLabelError(f"{list(label)} is not a basis label of K_{d.k}")
        if not coeff:
            continue
        source = d.column_of(label)
        column = [acc + p.scale(coeff) if not p.is_zero else acc for acc, p in zip(column, source)]
    return column


def restrict_map(d: KoszulMap, generators: Sequence[Combination], names: Optional[Sequence[Any]] = None) -> PolyMatrix:
    """Matrix of d restricted to the free module spanned by the given combinations"""
    columns = [_combination_column(d, combo) for combo in generators]
    labels = list(names) if names is not None else [_combination_name(c) for c in generators]
    return PolyMatrix.from_columns(columns, d.matrix.rows, d.n, row_labels=d.row_labels, col_labels=labels)


def _combination_name(combo: Combination) -> str:
    parts = []
    for label, coeff in combo.items():
        name = "e" + "".join(str(e) for e in label)
        if coeff == 1:
            parts.append(f"+{name}")
        elif coeff == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'}{abs(coeff)}{name}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


@dataclass
class CokernelPresentation:
    """Presentation of Z_i / d_i(F) on the surviving K_i basis labels"""

    matrix: PolyMatrix
    eliminated: List[WedgeIndex]
    kept: List[WedgeIndex]
    substitution: Dict[WedgeIndex, Dict[WedgeIndex, Fraction]]


def _solve_elimination(
    generators: Sequence[Dict[WedgeIndex, Fraction]],
    eliminate: Sequence[WedgeIndex],
    kept: Sequence[WedgeIndex]
) -> Dict[WedgeIndex, Dict[WedgeIndex, Fraction]]:
    # Gauss-Jordan on [V_E | V_R]; afterwards e_E = -V_E^{-1} V_R e_R
    size = len(eliminate)
    aug = [[g.get(e, Fraction(0)) for e in eliminate] + [g.get(r, Fraction(0)) for r in kept] for g in generators]
    for c in range(size):
        pivot = next((r for r in range(c, size) if aug[r][c] != 0), None)
        if pivot is None:
            raise RankDeficiencyError("eliminated labels do not form an invertible block")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        lead = aug[c][c]
        aug[c] = [v / lead for v in aug[c]]
        for r in range(size):
            if r != c and aug[r][c] != 0:
                factor = aug[r][c]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[c])]
    return {
        e: {r: -aug[idx][size + k] for k, r in enumerate(kept) if aug[idx][size + k] != 0}
        for idx, e in enumerate(eliminate)
    }


def cokernel_presentation(
    n: int,
    i: int,
    generators: Sequence[Combination],
    eliminate: Optional[Sequence[Sequence[int]]] = None,
    row_order: Optional[Sequence[Sequence[int]]] = None,
    row_signs: Optional[Sequence[int]] = None,
    col_order: Optional[Sequence[Sequence[int]]] = None
) -> CokernelPresentation:
    """
    Presentation matrix of Z_i / d_i(F), F spanned by combinations of K_i labels

    Z_i / d_i(F) = K_i / (F + im d_{i+1}). Labels in `eliminate` are solved
    for using the generators of F; the remaining labels index the rows. Rows
    follow `row_order` when given and are multiplied by `row_signs`.
    """
    basis = wedge_basis(n, i)
    combos = [{validate_wedge(k, n): Fraction(v) for k, v in g.items() if v} for g in generators]
    for combo in combos:
        for label in combo:
            if len(label) != i:
                raise InvalidLabelError(f"{list(label)} is not a basis label of K_{i}")

    if eliminate is None:
        values = [[combo.get(s, Fraction(0)) for s in basis] for combo in combos]
        echelon = row_echelon(values)
        if echelon.rank < len(combos):
            raise RankDeficiencyError("free generators are linearly dependent")
        eliminated = [basis[c] for c in echelon.pivot_cols]
    else:
        eliminated = [validate_wedge(e, n) for e in eliminate]
    if len(eliminated) != len(combos):
        raise RankDeficiencyError(f"need {len(combos)} labels to eliminate, got {len(eliminated)}")

    kept = [s for s in basis if s not in eliminated]
    if row_order is not None:
        ordered = [validate_wedge(s, n) for s in row_order]
        if sorted(ordered) != sorted(kept):
            raise InvalidLabelError("row order must list exactly the surviving labels")
        kept = ordered
    substitution = _solve_elimination(combos, eliminated, kept)

    d_next = differential(n, i + 1) if i < n else None
    columns = list(d_next.col_labels) if d_next is not None else []
    if col_order is not None:
        columns = [validate_wedge(s, n) for s in col_order]

    zero = Polynomial.zero(n)
    grid = [[zero] * len(columns) for _ in kept]
    row_at = {s: idx for idx, s in enumerate(kept)}
    for j, label in enumerate(columns):
        for source, entry in zip(d_next.row_labels, d_next.column_of(label)):
            if entry.is_zero:
                continue
            if source in row_at:
                grid[row_at[source]][j] = grid[row_at[source]][j] + entry
            else:
                for target, coeff in substitution[source].items():
                    grid[row_at[target]][j] = grid[row_at[target]][j] + entry.scale(coeff)

    matrix = PolyMatrix(grid, n=n, cols=len(columns), row_labels=kept, col_labels=columns)
    if row_signs is not None:
        matrix = matrix.scale_rows(row_signs)
    logger.debug(f"Presented Z_{i}/d(F) for n={n}: {matrix.rows}x{matrix.cols}, eliminated {len(eliminated)} labels")
    return CokernelPresentation(matrix=matrix, eliminated=eliminated, kept=kept, substitution=substitution)
