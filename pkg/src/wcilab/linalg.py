"""Small exact linear-algebra kernel over the rationals.

Dense nullspace extraction and incremental sparse rank, both by Gaussian
elimination with Fraction arithmetic.  Deterministic pivoting: first usable
column, rows processed in the order supplied.
"""

from __future__ import annotations

from fractions import Fraction


def nullspace_dense(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of the matrix given by ``rows``.

    Returns one vector per free column, in ascending column order.
    """
    matrix = [list(map(Fraction, row)) for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(matrix)):
            if matrix[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(matrix):
            break
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            vec[pc] = -matrix[row_idx][fc]
        basis.append(vec)
    return basis


class RankAccumulator:
    """Incremental exact rank of sparse rows (dicts column -> Fraction)."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {c: Fraction(v) for c, v in row.items() if v != 0}
        while row:
            col = min(row)
            pivot = self.pivots.get(col)
            if pivot is None:
                return row
            factor = row[col]
            for c, v in pivot.items():
                new = row.get(c, 0) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
        return row

    def add_row(self, row: dict[int, Fraction]) -> bool:
        """Reduce the row against current pivots; keep it if independent."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        col = min(reduced)
        inv = 1 / reduced[col]
        self.pivots[col] = {c: v * inv for c, v in reduced.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)
