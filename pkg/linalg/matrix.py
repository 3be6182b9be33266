"""
Matrices over the polynomial ring

PolyMatrix is an immutable row-major grid of Polynomials sharing one n,
with optional row and column labels (wedge indices as tuples, or free
generator names as strings).
"""

import json
import logging
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from algebra.polynomial import Polynomial
from core.exceptions import DimensionMismatchError, InputFormatError, InvalidLabelError, ShapeError
from core.fingerprint import create_fingerprint

logger = logging.getLogger(__name__)

Label = Hashable


class PolyMatrix:
    """rows x cols matrix of Polynomials"""

    __slots__ = ("rows", "cols", "n", "_entries", "row_labels", "col_labels")

    def __init__(
        self,
        entries: Sequence[Sequence[Polynomial]],
        n: Optional[int] = None,
        cols: Optional[int] = None,
        row_labels: Optional[Sequence[Label]] = None,
        col_labels: Optional[Sequence[Label]] = None
    ):
        grid = tuple(tuple(row) for row in entries)
        rows = len(grid)
        if cols is None:
            if not rows:
                raise ShapeError("column count is required for a matrix with no rows")
            cols = len(grid[0])
        if any(len(row) != cols for row in grid):
            raise ShapeError(f"every row must have {cols} entries")
        if n is None:
            if not rows or not cols:
                raise ShapeError("variable count is required for an empty matrix")
            n = grid[0][0].n
        if any(p.n != n for row in grid for p in row):
            raise DimensionMismatchError(f"matrix entries must all live in {n} variables")
        if row_labels is not None and len(row_labels) != rows:
            raise ShapeError(f"expected {rows} row labels, got {len(row_labels)}")
        if col_labels is not None and len(col_labels) != cols:
            raise ShapeError(f"expected {cols} column labels, got {len(col_labels)}")

        self.rows = rows
        self.cols = cols
        self.n = n
        self._entries = grid
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zeros(cls, rows: int, cols: int, n: int, **labels) -> "PolyMatrix":
        zero = Polynomial.zero(n)
        return cls([[zero] * cols for _ in range(rows)], n=n, cols=cols, **labels)

    @classmethod
    def identity(cls, size: int, n: int) -> "PolyMatrix":
        zero = Polynomial.zero(n)
        one = Polynomial.one(n)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)], n=n, cols=size)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Polynomial]], rows: int, n: int, **labels) -> "PolyMatrix":
        grid = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(grid, n=n, cols=len(columns), **labels)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], n: int, **labels) -> "PolyMatrix":
        grid = [[Polynomial.parse(text, n) for text in row] for row in rows]
        return cls(grid, n=n, cols=len(grid[0]) if grid else 0, **labels)

    # ------------------------------------------------------------------
    # access

    def __getitem__(self, index: Tuple[int, int]) -> Polynomial:
        i, j = index
        return self._entries[i][j]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> Tuple[Polynomial, ...]:
        return self._entries[i]

    def column(self, j: int) -> Tuple[Polynomial, ...]:
        return tuple(row[j] for row in self._entries)

    def entries(self) -> Tuple[Tuple[Polynomial, ...], ...]:
        return self._entries

    def is_square(self) -> bool:
        return self.rows == self.cols

    def nonzero_count(self) -> int:
        return sum(1 for row in self._entries for p in row if not p.is_zero)

    def density(self) -> float:
        if not self.rows or not self.cols:
            return 0.0
        return self.nonzero_count() / (self.rows * self.cols)

    def row_index(self, label: Label) -> int:
        if self.row_labels is None or label not in self.row_labels:
            raise InvalidLabelError(f"unknown row label {label!r}")
        return self.row_labels.index(label)

    def col_index(self, label: Label) -> int:
        if self.col_labels is None or label not in self.col_labels:
            raise InvalidLabelError(f"unknown column label {label!r}")
        return self.col_labels.index(label)

    # ------------------------------------------------------------------
    # derived matrices

    def submatrix(self, row_idx: Optional[Sequence[int]] = None, col_idx: Optional[Sequence[int]] = None) -> "PolyMatrix":
        row_idx = list(range(self.rows)) if row_idx is None else list(row_idx)
        col_idx = list(range(self.cols)) if col_idx is None else list(col_idx)
        grid = [[self._entries[i][j] for j in col_idx] for i in row_idx]
        return PolyMatrix(
            grid,
            n=self.n,
            cols=len(col_idx),
            row_labels=[self.row_labels[i] for i in row_idx] if self.row_labels else None,
            col_labels=[self.col_labels[j] for j in col_idx] if self.col_labels else None
        )

    def select(self, row_labels: Optional[Sequence[Label]] = None, col_labels: Optional[Sequence[Label]] = None) -> "PolyMatrix":
        """Submatrix addressed by labels, in the order given"""
        rows = None if row_labels is None else [self.row_index(lab) for lab in row_labels]
        cols = None if col_labels is None else [self.col_index(lab) for lab in col_labels]
        return self.submatrix(rows, cols)

    def delete_row(self, i: int) -> "PolyMatrix":
        return self.submatrix([k for k in range(self.rows) if k != i], None)

    def transpose(self) -> "PolyMatrix":
        grid = [[self._entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return PolyMatrix(grid, n=self.n, cols=self.rows, row_labels=self.col_labels, col_labels=self.row_labels)

    def with_labels(self, row_labels: Optional[Sequence[Label]] = None, col_labels: Optional[Sequence[Label]] = None) -> "PolyMatrix":
        return PolyMatrix(self._entries, n=self.n, cols=self.cols, row_labels=row_labels, col_labels=col_labels)

    def scale_rows(self, factors: Sequence[int]) -> "PolyMatrix":
        grid = [[p.scale(f) for p in row] for row, f in zip(self._entries, factors)]
        return PolyMatrix(grid, n=self.n, cols=self.cols, row_labels=self.row_labels, col_labels=self.col_labels)

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.rows != self.rows:
            raise ShapeError(f"cannot stack {self.shape} beside {other.shape}")
        grid = [a + b for a, b in zip(self._entries, other.entries())]
        labels = None
        if self.col_labels is not None and other.col_labels is not None:
            labels = self.col_labels + other.col_labels
        return PolyMatrix(grid, n=self.n, cols=self.cols + other.cols, row_labels=self.row_labels, col_labels=labels)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        if self.n != other.n:
            raise DimensionMismatchError("matrix factors live in different rings")
        zero = Polynomial.zero(self.n)
        other_cols = [other.column(j) for j in range(other.cols)]
        grid = []
        for row in self._entries:
            out = []
            for col in other_cols:
                acc = zero
                for a, b in zip(row, col):
                    if not a.is_zero and not b.is_zero:
                        acc = acc + a * b
                out.append(acc)
            grid.append(out)
        return PolyMatrix(grid, n=self.n, cols=other.cols, row_labels=self.row_labels, col_labels=other.col_labels)

    def times_integer_matrix(self, lam: Sequence[Sequence[int]]) -> "PolyMatrix":
        """self * lam for an integer matrix lam given as nested lists"""
        width = len(lam[0]) if len(lam) else 0
        if len(lam) != self.cols:
            raise ShapeError(f"integer factor has {len(lam)} rows, expected {self.cols}")
        zero = Polynomial.zero(self.n)
        grid = []
        for row in self._entries:
            out = []
            for j in range(width):
                acc = zero
                for p, lam_row in zip(row, lam):
                    c = int(lam_row[j])
                    if c and not p.is_zero:
                        acc = acc + p.scale(c)
                out.append(acc)
            grid.append(out)
        return PolyMatrix(grid, n=self.n, cols=width, row_labels=self.row_labels)

    def is_zero(self) -> bool:
        return all(p.is_zero for row in self._entries for p in row)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.n == other.n and self._entries == other.entries()

    def __hash__(self) -> int:
        return hash((self.shape, self._entries))

    # ------------------------------------------------------------------
    # serialization

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "rows": self.rows,
            "cols": self.cols,
            "n": self.n,
            "entries": [[p.to_dict() for p in row] for row in self._entries]
        }
        if self.row_labels is not None:
            payload["row_labels"] = [_label_out(lab) for lab in self.row_labels]
        if self.col_labels is not None:
            payload["col_labels"] = [_label_out(lab) for lab in self.col_labels]
        return payload

    def fingerprint(self) -> str:
        return create_fingerprint(self.to_dict())

    @classmethod
    def from_dict(cls, data: Any, path: str = "$") -> "PolyMatrix":
        if not isinstance(data, dict):
            raise InputFormatError("matrix must be an object", position=path)
        rows = data.get("rows")
        cols = data.get("cols")
        raw = data.get("entries")
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
            raise InputFormatError("fields 'rows' and 'cols' must be non-negative integers", position=path)
        if not isinstance(raw, list) or len(raw) != rows:
            raise InputFormatError(f"field 'entries' must hold {rows} rows", position=f"{path}.entries")
        grid: List[List[Polynomial]] = []
        for i, row in enumerate(raw):
            if not isinstance(row, list) or len(row) != cols:
                raise InputFormatError(f"row must hold {cols} entries", position=f"{path}.entries[{i}]")
            grid.append([_entry_in(p, data.get("n"), f"{path}.entries[{i}][{j}]") for j, p in enumerate(row)])
        n = data.get("n")
        if n is None:
            if not grid or not grid[0]:
                raise InputFormatError("field 'n' is required for an empty matrix", position=path)
            n = grid[0][0].n
        try:
            return cls(
                grid,
                n=n,
                cols=cols,
                row_labels=_labels_in(data.get("row_labels")),
                col_labels=_labels_in(data.get("col_labels"))
            )
        except (ShapeError, DimensionMismatchError) as e:
            raise InputFormatError(e.message, position=path)

    @classmethod
    def from_json(cls, text: str) -> "PolyMatrix":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"malformed JSON: {e.msg}", position=f"line {e.lineno} column {e.colno}")
        return cls.from_dict(data)

    def to_text(self) -> str:
        cells = [[str(p) for p in row] for row in self._entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}, n={self.n})"


def _label_out(label: Label) -> Any:
    return list(label) if isinstance(label, tuple) else label


def _labels_in(raw: Any) -> Optional[List[Label]]:
    if raw is None:
        return None
    return [tuple(lab) if isinstance(lab, list) else lab for lab in raw]


def _entry_in(raw: Any, n: Optional[int], path: str) -> Polynomial:
    # entries may be polynomial objects or strings when n is given
    if isinstance(raw, str):
        if not isinstance(n, int):
            raise InputFormatError("string entries need the field 'n'", position=path)
        return Polynomial.parse(raw, n)
    if isinstance(raw, int) and isinstance(n, int):
        return Polynomial.constant(n, raw)
    return Polynomial.from_dict(raw, path)
