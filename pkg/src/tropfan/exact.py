"""Exact integer and rational linear algebra.

Everything downstream (circuits, fan cones, ray shooting) depends on exact
zero tests, so no operation here ever touches a float.  Elimination uses the
fraction-free Bareiss scheme: cross-multiplication followed by an exact
division by the previous pivot, which keeps every intermediate entry an
integer minor of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import SingularBasis
from .util import primitive


@dataclass(frozen=True)
class IntMat:
    """Immutable integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "IntMat":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        for row in data:
            if len(row) != width:
                raise ValueError("ragged rows")
        return cls(len(data), width, data)

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries))

    def row_lists(self) -> list[list[int]]:
        """Mutable copy for elimination routines."""
        return [list(row) for row in self.entries]

    def transpose(self) -> "IntMat":
        return IntMat(self.cols, self.rows, self.columns)

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]


@dataclass(frozen=True)
class RatMat:
    """Immutable rational matrix; Fraction keeps entries in lowest terms."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "RatMat":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(len(data), len(data[0]), data)

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]


def _bareiss_forward(m: list[list[int]]) -> int:
    """Destructive fraction-free row echelon reduction; returns the rank."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * piv - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def rank(A: IntMat) -> int:
    """Rank over the rationals, computed fraction-free."""
    return _bareiss_forward(A.row_lists())


def rank_of_rows(rows) -> int:
    """Rank of a list of integer row vectors (convenience wrapper)."""
    data = [list(r) for r in rows]
    if not data:
        return 0
    return _bareiss_forward(data)


def det(A: IntMat) -> int:
    """Exact determinant of a square matrix via Bareiss elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant requires a square matrix")
    m = A.row_lists()
    n = A.rows
    sign = 1
    prev = 1
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            mic = m[i][c]
            row_i = m[i]
            row_c = m[c]
            for j in range(c + 1, n):
                row_i[j] = (row_i[j] * piv - mic * row_c[j]) // prev
            row_i[c] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def det_of_columns(cols) -> int:
    """Determinant of a square matrix given by its columns."""
    n = len(cols)
    return det(IntMat.from_rows([[cols[j][i] for j in range(n)] for i in range(n)]))


def jordan_reduce_on_columns(m: list[list[int]], pivot_cols) -> list[int]:
    """Destructive integer Gauss-Jordan reduction pivoting on the given 0-based columns.

    Uses the Montante/Bareiss division so entries stay integral.  After the
    call, row i has its pivot at pivot_cols[i] and zeros in every other pivot
    column; the zero pattern outside the pivot columns equals that of the
    reduced row echelon form.  Returns the pivot values (one per row).
    Raises SingularBasis if the pivot columns are dependent.
    """
    nrows = len(m)
    ncols = len(m[0])
    prev = 1
    for r, c in enumerate(pivot_cols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            raise SingularBasis(f"columns {list(pivot_cols)} are linearly dependent")
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(nrows):
            if i == r:
                continue
            row_i = m[i]
            mic = row_i[c]
            for j in range(ncols):
                row_i[j] = (row_i[j] * piv - mic * row_r[j]) // prev
        prev = piv
    return [m[r][c] for r, c in enumerate(pivot_cols)]


def reduce_on_basis(A: IntMat, basis) -> RatMat:
    """Row-reduce A so the columns indexed by the (1-based) basis form the identity.

    Basis columns map to unit vectors in sorted order; the rowspace is
    unchanged.  Raises SingularBasis when the selected columns are dependent.
    """
    bcols = sorted(b - 1 for b in basis)
    if len(bcols) != A.rows:
        raise SingularBasis(f"need exactly {A.rows} basis columns, got {len(bcols)}")
    m = A.row_lists()
    jordan_reduce_on_columns(m, bcols)
    out = []
    for r, c in enumerate(bcols):
        piv = m[r][c]
        out.append(tuple(Fraction(x, piv) for x in m[r]))
    return RatMat(A.rows, A.cols, tuple(out))


def _rref_fractions(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (nonzero rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(A: IntMat) -> RatMat:
    """Canonical reduced row echelon form with zero rows dropped.

    Two integer matrices have equal rowspace iff their rref outputs are equal,
    which is how rowspace assertions are phrased in the tests.
    """
    rows = [[Fraction(x) for x in row] for row in A.entries]
    reduced, _ = _rref_fractions(rows)
    if not reduced:
        reduced = [[Fraction(0)] * A.cols]
    return RatMat(len(reduced), A.cols, tuple(tuple(row) for row in reduced))


def integer_kernel_basis(A: IntMat) -> IntMat:
    """Primitive integer rows spanning the rational kernel of A.

    The result K satisfies A @ K^T = 0 and has full row rank n - rank(A);
    only its rowspace is canonical, not the individual rows.
    """
    rows = [[Fraction(x) for x in row] for row in A.entries]
    reduced, pivots = _rref_fractions(rows)
    n = A.cols
    free_cols = [c for c in range(n) if c not in pivots]
    if not free_cols:
        raise ValueError("kernel is trivial; matrix has full column rank")
    kernel_rows = []
    for f in free_cols:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -reduced[r][f]
        scale = lcm(*(x.denominator for x in vec))
        ints = [int(x * scale) for x in vec]
        kernel_rows.append(primitive(ints))
    return IntMat.from_rows(kernel_rows)


def solve_columns(cols, rhs) -> list[Fraction] | None:
    """Solve sum_j x_j * cols[j] = rhs exactly; free variables are set to zero.

    Returns None when the system is inconsistent.
    """
    ncols = len(cols)
    nrows = len(rhs)
    aug = [[Fraction(cols[j][i]) for j in range(ncols)] + [Fraction(rhs[i])] for i in range(nrows)]
    reduced, pivots = _rref_fractions(aug)
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        sol[c] = reduced[r][ncols]
    return sol
