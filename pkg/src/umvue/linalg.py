"""Exact rational matrices: reduced row echelon form, rank, null space.

Elimination is plain Gauss-Jordan over Fraction. The null-space basis is
normalized deterministically: one vector per free column in ascending column
order, each scaled so its leading nonzero entry is 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Vector = tuple[Fraction, ...]


class Matrix:
    """A rectangular matrix of Fractions. Immutable by convention."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Sequence[Fraction]], ncols: int | None = None):
        self.rows: tuple[Vector, ...] = tuple(
            tuple(Fraction(x) for x in row) for row in rows
        )
        self.nrows = len(self.rows)
        if self.nrows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols does not match rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], nrows: int | None = None) -> "Matrix":
        if not columns:
            return cls([], ncols=0) if nrows is None else cls([()] * nrows, ncols=0)
        return cls(zip(*columns))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def mul_vector(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((row[j] * v[j] for j in range(self.ncols)), Fraction(0)) for row in self.rows)

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        return Matrix([[row[j] for j in cols] for row in self.rows], ncols=len(cols))

    def augment(self, extra: Sequence[Sequence[Fraction]]) -> "Matrix":
        """Append extra columns (given column-wise) on the right."""
        cols = self.columns() + [tuple(Fraction(x) for x in c) for c in extra]
        return Matrix.from_columns(cols, nrows=self.nrows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]
    rank: int


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with pivot columns (strictly increasing)."""
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.ncols):
        pivot_row = next((i for i in range(pr, m.nrows) if rows[i][pc] != 0), None)
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = Fraction(1) / rows[pr][pc]
        rows[pr] = [x * inv for x in rows[pr]]
        for i in range(m.nrows):
            if i != pr and rows[i][pc] != 0:
                f = rows[i][pc]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.nrows:
            break
    return RrefResult(Matrix(rows, ncols=m.ncols), tuple(pivots), len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def rank_of_vectors(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a set of vectors (given as rows)."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return 0
    return rank(Matrix(vecs))


def null_space(m: Matrix) -> list[Vector]:
    """Exact basis of {x : m.x = 0}; empty list iff the kernel is trivial.

    One basis vector per free column, ascending; each vector is scaled so its
    first nonzero entry equals 1.
    """
    red, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red.rows[r][free]
        lead = next(x for x in vec if x != 0)
        basis.append(tuple(x / lead for x in vec))
    return basis


def solve_in_span(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve sum_j c_j * columns[j] = target exactly; None if inconsistent.

    When the columns are linearly independent the solution is unique; when
    they are dependent an arbitrary-but-deterministic solution is returned
    (free coefficients set to zero).
    """
    mat = Matrix.from_columns(list(columns) + [tuple(Fraction(x) for x in target)],
                              nrows=len(target))
    red, pivots, _ = rref(mat)
    n = len(columns)
    if n in pivots:
        return None
    coeffs = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        coeffs[pc] = red.rows[r][n]
    return coeffs
