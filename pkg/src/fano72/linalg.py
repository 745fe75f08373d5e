"""Exact linear algebra: fraction-free rank and rational nullspace.

Rows are sparse mappings {column: value}.  Incoming rational rows are
scaled to primitive integer rows (common denominator cleared, content
divided out, leading entry positive), and elimination uses integer
cross-multiplication only, so no rounding or pivot-size tolerance exists
anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


IntRow = dict[int, int]


def _primitive(row: IntRow) -> IntRow:
    if not row:
        return row
    content = reduce(gcd, row.values())
    if row[min(row)] < 0:
        content = -content
    return {c: v // content for c, v in row.items()}


def _to_int_row(row: Mapping[int, Fraction | int] | Sequence[Fraction | int]) -> IntRow:
    if not isinstance(row, Mapping):
        row = {i: v for i, v in enumerate(row)}
    entries = {c: Fraction(v) for c, v in row.items() if v}
    if not entries:
        return {}
    scale = reduce(lcm, (v.denominator for v in entries.values()))
    return _primitive({c: int(v * scale) for c, v in entries.items()})


class RowSpace:
    """An echelon basis of a rational row space, built incrementally."""

    def __init__(self, rows: Iterable[Mapping[int, Fraction | int] | Sequence] = ()):
        self._pivots: dict[int, IntRow] = {}
        for row in rows:
            self.insert(row)

    def copy(self) -> RowSpace:
        clone = RowSpace()
        clone._pivots = {c: dict(r) for c, r in self._pivots.items()}
        return clone

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row) -> IntRow:
        """Residual of a row after elimination against the basis (empty iff member)."""
        r = _to_int_row(row)
        while r:
            lead = min(r)
            pivot = self._pivots.get(lead)
            if pivot is None:
                break
            a, b = pivot[lead], r[lead]
            reduced: IntRow = {}
            for c in r.keys() | pivot.keys():
                v = a * r.get(c, 0) - b * pivot.get(c, 0)
                if v:
                    reduced[c] = v
            r = _primitive(reduced)
        return r

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def insert(self, row) -> bool:
        """Add a row to the space; False if it was already in the span."""
        residual = self.reduce(row)
        if not residual:
            return False
        self._pivots[min(residual)] = residual
        return True


def rank_of_rows(rows: Iterable) -> int:
    return RowSpace(rows).rank


def nullspace_basis(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace of a dense matrix, one vector per free column.

    The matrix is brought to reduced row echelon form over the rationals;
    each free column yields the standard basis vector of the solution space.
    """
    matrix = [[Fraction(v) for v in row] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(matrix)) if matrix[i][c]), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        scale = matrix[r][c]
        matrix[r] = [v / scale for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                matrix[i] = [vi - factor * vr for vi, vr in zip(matrix[i], matrix[r])]
        pivot_cols.append(c)
        r += 1
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row_index, p in enumerate(pivot_cols):
            vector[p] = -matrix[row_index][f]
        basis.append(tuple(vector))
    return basis
