import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Mapping, Sequence, Set, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form

logger = logging.getLogger(__name__)

SparseRow = Mapping[int, int]


@dataclass(frozen=True)
class ReductionResult:
    """Rank of an integer matrix and its invariant factors larger than one."""
    rank: int
    torsion: Tuple[int, ...] = ()
    unit_pivots: int = 0
    residual_shape: Tuple[int, int] = (0, 0)


@dataclass
class _SparseMatrix:
    rows: Dict[int, Dict[int, int]] = field(default_factory=dict)
    columns: Dict[int, Set[int]] = field(default_factory=dict)

    @classmethod
    def from_rows(cls, rows: Sequence[SparseRow]) -> "_SparseMatrix":
        matrix = cls()
        for r, row in enumerate(rows):
            entries = {c: v for c, v in row.items() if v}
            if not entries:
                continue
            matrix.rows[r] = entries
            for c in entries:
                matrix.columns.setdefault(c, set()).add(r)
        return matrix

    def drop_row(self, r: int):
        for c in self.rows.pop(r):
            holders = self.columns[c]
            holders.discard(r)
            if not holders:
                del self.columns[c]

    def add_multiple(self, target: int, source: int, factor: int):
        """row[target] -= factor * row[source]"""
        row = self.rows[target]
        for c, v in self.rows[source].items():
            updated = row.get(c, 0) - factor * v
            if updated:
                if c not in row:
                    self.columns.setdefault(c, set()).add(target)
                row[c] = updated
            elif c in row:
                del row[c]
                self.columns[c].discard(target)
                if not self.columns[c]:
                    del self.columns[c]
        if not row:
            del self.rows[target]


class SmithReducer:
    """
    Rank and torsion of sparse integer matrices.

    Entries equal to ±1 are used as pivots first: the pivot column is cleared from
    every other row, then the pivot row and column are discarded, which changes
    neither the rank nor the non-unit invariant factors. Whatever is left is handed
    to sympy's Smith normal form over ZZ.
    """

    def reduce(self, rows: Sequence[SparseRow], column_count: int) -> ReductionResult:
        matrix = _SparseMatrix.from_rows(rows)
        rank = self._eliminate_unit_pivots(matrix)
        unit_pivots = rank
        if not matrix.rows:
            return ReductionResult(rank, (), unit_pivots, (0, 0))
        residual_rank, torsion, shape = self._residual_invariants(matrix)
        logger.debug(
            f"Residual block {shape[0]}x{shape[1]} after {unit_pivots} unit pivots "
            f"(matrix {len(rows)}x{column_count}); torsion {torsion}"
        )
        return ReductionResult(rank + residual_rank, torsion, unit_pivots, shape)

    @staticmethod
    def _eliminate_unit_pivots(matrix: _SparseMatrix) -> int:
        rank = 0
        queue = deque(sorted(matrix.rows, key=lambda r: (len(matrix.rows[r]), r)))
        queued = set(queue)
        # A row outside the queue has not changed since it was found to hold no unit entry.
        while queue:
            r = queue.popleft()
            queued.discard(r)
            row = matrix.rows.get(r)
            if row is None:
                continue
            units = [c for c, v in row.items() if v in (1, -1)]
            if not units:
                continue
            pivot_column = min(units, key=lambda c: (len(matrix.columns[c]), c))
            pivot_value = row[pivot_column]
            for other in sorted(matrix.columns[pivot_column] - {r}):
                factor = matrix.rows[other][pivot_column] * pivot_value
                matrix.add_multiple(other, r, factor)
                if other in matrix.rows and other not in queued:
                    queue.append(other)
                    queued.add(other)
            matrix.drop_row(r)
            rank += 1
        return rank

    @staticmethod
    def _residual_invariants(matrix: _SparseMatrix) -> Tuple[int, Tuple[int, ...], Tuple[int, int]]:
        row_ids = sorted(matrix.rows)
        column_ids = sorted(matrix.columns)
        position = {c: k for k, c in enumerate(column_ids)}
        dense = []
        for r in row_ids:
            line = [ZZ(0)] * len(column_ids)
            for c, v in matrix.rows[r].items():
                line[position[c]] = ZZ(v)
            dense.append(line)
        shape = (len(row_ids), len(column_ids))
        normal = smith_normal_form(DomainMatrix(dense, shape, ZZ)).to_Matrix()
        diagonal = [abs(int(normal[k, k])) for k in range(min(shape))]
        rank = sum(1 for d in diagonal if d)
        torsion = tuple(sorted(d for d in diagonal if d > 1))
        return rank, torsion, shape


def reduce_rows(rows: Sequence[SparseRow], column_count: int) -> ReductionResult:
    return SmithReducer().reduce(rows, column_count)
