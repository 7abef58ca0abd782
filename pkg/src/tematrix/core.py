"""Dense exact rational matrices and the determinant/rank/minor machinery.

Entries are Python ints or ``fractions.Fraction`` values; nothing in this
module (or the package) ever touches a float.  Matrices are immutable value
objects: every transformation returns a new matrix, so instances can be
shared freely across threads and processes.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError, DomainError, SingularMatrixError

Scalar = int | Fraction


def _norm(x) -> Scalar:
    # Keep integers as ints: integer arithmetic is much faster than Fraction.
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


class ExactMatrix:
    """An immutable rows x cols grid of exact rationals.

    Zero-row and zero-column matrices are allowed; they serve as recursion
    base cases for the pivot/trim calculus.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries):
        data = tuple(tuple(_norm(x) for x in row) for row in entries)
        if data and any(len(r) != len(data[0]) for r in data):
            raise DimensionError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        return ExactMatrix(rows)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, pos):
        i, j = pos
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def col(self, j):
        return tuple(r[j] for r in self._data)

    @property
    def entries(self):
        return self._data

    def row_list(self):
        return [list(r) for r in self._data]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"ExactMatrix({self.row_list()!r})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for r in self._data for x in r)

    def is_zero_pm_one(self) -> bool:
        return all(x in (-1, 0, 1) for r in self._data for x in r)

    def is_pm_one(self) -> bool:
        return all(x in (-1, 1) for r in self._data for x in r)

    def is_zero_one(self) -> bool:
        return all(x in (0, 1) for r in self._data for x in r)

    # -- shape surgery ---------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self._data))) if self._data else ExactMatrix([])

    def submatrix(self, row_idx, col_idx) -> "ExactMatrix":
        return ExactMatrix([[self._data[i][j] for j in col_idx] for i in row_idx])

    def take_rows(self, row_idx) -> "ExactMatrix":
        return ExactMatrix([self._data[i] for i in row_idx])

    def take_cols(self, col_idx) -> "ExactMatrix":
        return ExactMatrix([[r[j] for j in col_idx] for r in self._data])

    def drop_row_col(self, i, j) -> "ExactMatrix":
        return ExactMatrix(
            [
                [x for jj, x in enumerate(r) if jj != j]
                for ii, r in enumerate(self._data)
                if ii != i
            ]
        )

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise DimensionError("row counts differ")
        return ExactMatrix([list(a) + list(b) for a, b in zip(self._data, other._data)])

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows and other.rows and self.cols != other.cols:
            raise DimensionError("column counts differ")
        return ExactMatrix(list(self._data) + list(other._data))

    # -- arithmetic -------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionError("inner dimensions differ")
            cols = other.transpose()._data
            return ExactMatrix(
                [[_dot(r, c) for c in cols] for r in self._data]
            )
        return ExactMatrix([[x * other for x in r] for r in self._data])

    def scale_rows(self, factors) -> "ExactMatrix":
        if len(factors) != self.rows:
            raise DimensionError("one factor per row required")
        return ExactMatrix(
            [[x * f for x in r] for r, f in zip(self._data, factors)]
        )

    def scale_cols(self, factors) -> "ExactMatrix":
        if len(factors) != self.cols:
            raise DimensionError("one factor per column required")
        return ExactMatrix(
            [[x * f for x, f in zip(r, factors)] for r in self._data]
        )


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def dot(a, b) -> Scalar:
    if len(a) != len(b):
        raise DimensionError("vector lengths differ")
    return _norm(_dot(a, b))


def _det_bareiss_int(grid) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss elimination).

    All intermediate values stay integral, which keeps big-int growth tame on
    the search hot paths.
    """
    n = len(grid)
    if n == 0:
        return 1
    a = [list(r) for r in grid]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m: ExactMatrix) -> Scalar:
    """Exact determinant of a square matrix.

    Integer matrices go through fraction-free Bareiss elimination; rational
    ones are row-scaled to integers first and the scale divided back out.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return 1
    if m.is_integer():
        return _det_bareiss_int(m.entries)
    scale = Fraction(1)
    int_rows = []
    for row in m.entries:
        mult = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        scale *= mult
        int_rows.append([int(x * mult) for x in row])
    return _norm(Fraction(_det_bareiss_int(int_rows)) / scale)


def _rref(m: ExactMatrix):
    """Reduced row echelon form over the rationals.

    Returns ``(rref_rows, pivot_cols, det_of_pivot_block)``; for full-row-rank
    input ``det_of_pivot_block`` is the maximal minor on the pivot columns.
    """
    a = [[Fraction(x) for x in r] for r in m.entries]
    rows, cols = m.rows, m.cols
    pivots = []
    det_block = Fraction(1)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = None
        for i in range(r, rows):
            if a[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
            det_block = -det_block
        det_block *= a[r][c]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots, det_block


def rank(m: ExactMatrix) -> int:
    """Exact rank over the rationals."""
    return len(_rref(m)[1])


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse via Gauss-Jordan elimination on [M | I]."""
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    aug = ExactMatrix(
        [list(m.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    )
    rref, pivots, _ = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return ExactMatrix([row[n:] for row in rref])


def solve(m: ExactMatrix, rhs) -> list[Fraction] | None:
    """Solve ``x . M = rhs`` for a row vector x (M's rows as the basis).

    Returns None when rhs is outside the row space.  When M's rows are
    dependent an arbitrary representative solution is returned.
    """
    if len(rhs) != m.cols:
        raise DimensionError("rhs length differs from column count")
    # Solve M^T x^T = rhs^T by elimination on [M^T | rhs^T].
    a = [[Fraction(x) for x in row] for row in m.transpose().entries]
    b = [Fraction(x) for x in rhs]
    n_rows, n_cols = len(a), m.rows
    x = [Fraction(0)] * n_cols
    piv_of_col = {}
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        sel = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        b[r], b[sel] = b[sel], b[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        b[r] *= inv
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
                b[i] -= f * b[r]
        piv_of_col[c] = r
        r += 1
    for i in range(r, n_rows):
        if b[i] != 0:
            return None
    for c, ri in piv_of_col.items():
        x[c] = b[ri]
    return x


def maximal_minors(m: ExactMatrix):
    """Yield ``(col_subset, value)`` for every rows x rows minor of a full set.

    Uses the echelon reduction: after bringing M to reduced echelon form R
    with pivot columns J0, every maximal minor equals det(M^{J0}) times a
    (complementary) square minor of the non-pivot block of R.  This makes the
    typical minor a tiny determinant instead of a rows x rows one.
    """
    k, n = m.rows, m.cols
    if k == 0:
        yield (), 1
        return
    rref, pivots, det_block = _rref(m)
    if len(pivots) < k:
        # Dependent rows: every maximal minor vanishes.
        for cols in itertools.combinations(range(n), k):
            yield cols, 0
        return
    nonpiv = [c for c in range(n) if c not in pivots]
    block = [[rref[i][c] for c in nonpiv] for i in range(k)]
    for t in range(0, min(k, len(nonpiv)) + 1):
        for rows_sel in itertools.combinations(range(k), t):
            kept_pivots = [pivots[i] for i in range(k) if i not in rows_sel]
            for cols_sel in itertools.combinations(range(len(nonpiv)), t):
                minor = det(ExactMatrix([[block[i][j] for j in cols_sel] for i in rows_sel]))
                cols = tuple(sorted(kept_pivots + [nonpiv[j] for j in cols_sel]))
                yield cols, _norm(det_block * minor)


def maximal_minor_abs_values(m: ExactMatrix) -> set:
    """The set of absolute values of all maximal minors (full row set)."""
    return {abs(Fraction(v)) for _, v in maximal_minors(m)}


def gcddet(m: ExactMatrix) -> int:
    """gcd of the absolute values of all maximal (rows x rows) minors.

    Integer entries are required.  Returns 0 exactly when the rows are
    dependent, and 1 for the empty row set.  Column subsets are scanned in
    lexicographic order with an early exit once the gcd reaches 1.
    """
    if not m.is_integer():
        raise DomainError("gcddet requires integer entries")
    k, n = m.rows, m.cols
    if k == 0:
        return 1
    if k > n:
        return 0
    g = 0
    for cols in itertools.combinations(range(n), k):
        v = det(m.take_cols(cols))
        g = gcd(g, abs(v))
        if g == 1:
            return 1
    return g


def primitive(vec) -> tuple:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in vec:
        if not isinstance(x, int):
            raise DomainError("primitive() requires integer entries")
        g = gcd(g, abs(x))
    if g in (0, 1):
        return tuple(vec)
    return tuple(x // g for x in vec)
