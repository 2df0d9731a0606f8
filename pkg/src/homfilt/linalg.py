"""Exact dense linear algebra over the rationals.

Everything in this module works with ``fractions.Fraction`` entries, so all
ranks, kernels and solutions are exact.  No floating point is used anywhere:
the strictness and cohomology computations built on top of this module are
rank conditions, and ranks are not robust under rounding.

Matrices are small (desk scale, a few hundred rows at most), so the
implementation is deliberately dense and simple.  The one non-standard
primitive is :func:`echelon_with_pivot_order`, a reduced row echelon form
whose pivot search scans the columns in a caller-supplied order.  Scanning
columns by decreasing filtration weight is what makes the induced
filtrations on kernels, images and quotients computable further up.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class Matrix:
    """An immutable dense matrix of Fractions.

    ``entries`` is stored as a tuple of row tuples.  A ``rows x 0`` or
    ``0 x cols`` matrix is legal and shows up constantly (kernels of
    injective maps, objects of dimension zero, ...).
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable]):
        ents = tuple(tuple(_frac(x) for x in row) for row in entries)
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise ValueError(f"expected {rows}x{cols} entries")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer width of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.entries
        out = []
        for r in self.entries:
            out.append(
                [sum((r[k] * ot[k][j] for k in range(self.cols) if r[k]), Fraction(0))
                 for j in range(other.cols)]
            )
        return Matrix(self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return Matrix(
            self.rows, self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-x for x in row] for row in self.entries])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.col(j) for j in range(self.cols)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(
            self.rows, self.cols + other.cols,
            [ra + rb for ra, rb in zip(self.entries, other.entries)],
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def select_columns(self, js: Sequence[int]) -> "Matrix":
        return Matrix(self.rows, len(js), [[row[j] for j in js] for row in self.entries])

    def select_rows(self, iis: Sequence[int]) -> "Matrix":
        return Matrix(len(iis), self.cols, [self.entries[i] for i in iis])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times a column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        v = [_frac(x) for x in vec]
        return tuple(
            sum((row[k] * v[k] for k in range(self.cols) if row[k]), Fraction(0))
            for row in self.entries
        )


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, with (i, j) -> i * b.rows + j row-major indexing."""
    out = []
    for ia in range(a.rows):
        for ib in range(b.rows):
            row = []
            for ja in range(a.cols):
                aij = a.entries[ia][ja]
                row.extend(aij * x for x in b.entries[ib])
            out.append(row)
    return Matrix(a.rows * b.rows, a.cols * b.cols, out)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b.entries[i][j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, out)


def echelon_with_pivot_order(m: Matrix, order: Sequence[int]) -> Matrix:
    """Reduced row echelon form with a prescribed column scan order.

    The pivot search visits the columns in the order given by ``order`` (a
    permutation of ``range(m.cols)``); within each visited column the first
    usable row becomes the pivot, is normalised to 1, and the column is
    cleared in every other row.  With the natural order this is the ordinary
    reduced echelon form.  With columns ordered by decreasing weight it
    produces weight-adapted bases of row spaces, which is how the filtered
    layer computes induced filtrations.
    """
    order = list(order)
    if sorted(order) != list(range(m.cols)):
        raise ValueError("order must be a permutation of the column indices")
    mat, _ = echelon_with_pivots(m, order)
    return mat


def echelon_with_pivots(m: Matrix, order: Sequence[int]) -> tuple[Matrix, list[tuple[int, int]]]:
    """Like :func:`echelon_with_pivot_order` but also returns the pivots.

    ``order`` may be a partial scan: columns not listed are never chosen as
    pivots (they still get reduced row entries).  Pivots come back as
    (row, column) pairs in the order the columns were scanned.  Zero rows
    are moved to the bottom of the result.
    """
    order = list(order)
    if len(set(order)) != len(order) or any(c < 0 or c >= m.cols for c in order):
        raise ValueError("order must list distinct valid column indices")
    work = [list(row) for row in m.entries]
    n = m.rows
    pivots: list[tuple[int, int]] = []
    used_rows: set[int] = set()
    for col in order:
        pr = None
        for i in range(n):
            if i not in used_rows and work[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        used_rows.add(pr)
        pivots.append((pr, col))
        inv = Fraction(1) / work[pr][col]
        work[pr] = [x * inv for x in work[pr]]
        for i in range(n):
            if i != pr and work[i][col] != 0:
                c = work[i][col]
                work[i] = [a - c * b for a, b in zip(work[i], work[pr])]
    pivot_rows = [pr for pr, _ in pivots]
    rest = [i for i in range(n) if i not in used_rows]
    reordered = [work[i] for i in pivot_rows] + [work[i] for i in rest]
    remap = {old: new for new, old in enumerate(pivot_rows + rest)}
    pivots = [(remap[pr], col) for pr, col in pivots]
    return Matrix(n, m.cols, reordered), pivots


def rank(m: Matrix) -> int:
    _, pivots = echelon_with_pivots(m, range(m.cols))
    return len(pivots)


def row_space_basis(m: Matrix, order: Sequence[int] | None = None) -> Matrix:
    """A basis of the row space, one basis vector per row, echelon-reduced."""
    if order is None:
        order = range(m.cols)
    red, pivots = echelon_with_pivots(m, order)
    return red.select_rows(range(len(pivots)))


def kernel_basis(m: Matrix) -> Matrix:
    """Columns of the result form a basis of the right kernel of ``m``."""
    red, pivots = echelon_with_pivots(m, range(m.cols))
    pivot_cols = {c: r for r, c in pivots}
    free_cols = [j for j in range(m.cols) if j not in pivot_cols]
    cols = []
    for f in free_cols:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for c, r in pivot_cols.items():
            v[c] = -red.entries[r][f]
        cols.append(v)
    return Matrix(m.cols, len(cols), [[cols[k][i] for k in range(len(cols))] for i in range(m.cols)])


def solve_affine(a: Matrix, b: Sequence) -> tuple[tuple | None, Matrix]:
    """Solve a x = b exactly.

    Returns ``(particular, kernel)`` where ``particular`` is one solution as
    a tuple (or ``None`` when the system is inconsistent) and ``kernel`` is
    :func:`kernel_basis` of ``a``, so the full solution set is
    ``particular + span(kernel columns)``.
    """
    b = [_frac(x) for x in b]
    if len(b) != a.rows:
        raise ValueError("right hand side length does not match the row count")
    aug = a.hstack(Matrix(a.rows, 1, [[x] for x in b]))
    red, pivots = echelon_with_pivots(aug, range(a.cols))
    ker = kernel_basis(a)
    # consistency: after eliminating with pivots in the coefficient columns the
    # remaining rows must have zero in the augmented column
    pivot_row_count = len(pivots)
    for i in range(pivot_row_count, a.rows):
        if red.entries[i][a.cols] != 0:
            return None, ker
    x = [Fraction(0)] * a.cols
    for r, c in pivots:
        x[c] = red.entries[r][a.cols]
    return tuple(x), ker


def solve_unique(a: Matrix, b: Sequence) -> tuple:
    """Solve a x = b, insisting the solution exists and is unique."""
    sol, ker = solve_affine(a, b)
    if sol is None:
        raise ValueError("inconsistent linear system")
    if ker.cols != 0:
        raise ValueError("linear system is underdetermined")
    return sol


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve a X = b column by column; None when any column is inconsistent.

    When the system is underdetermined the free coordinates are set to zero,
    so the answer is deterministic.
    """
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    cols = []
    for j in range(b.cols):
        sol, _ = solve_affine(a, b.col(j))
        if sol is None:
            return None
        cols.append(sol)
    return Matrix(a.cols, b.cols, [[cols[j][i] for j in range(b.cols)] for i in range(a.cols)])


def intersection_dim(a: Matrix, b: Matrix) -> int:
    """Dimension of the intersection of two column spaces in the same ambient."""
    if a.rows != b.rows:
        raise ValueError("ambient dimension mismatch")
    ra, rb = rank(a), rank(b)
    return ra + rb - rank(a.hstack(b))


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    inv = solve_matrix(m, Matrix.identity(m.rows))
    if inv is None or rank(m) != m.rows:
        raise ValueError("matrix is singular")
    return inv
