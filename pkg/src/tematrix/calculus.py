"""Pivot/trim calculus, resigning, rescaling, and complement operations.

The Gauss pivot at position (i, j) divides row i by entry (i, j) and clears
the rest of column j; the trim additionally deletes row i and column j.  On
0,1 matrices the row/column complement operations (mod-2 addition of one row
or column to all others) generate the complement orbit, which is how trims of
sign-normalized +-1 matrices are indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ExactMatrix
from .errors import DimensionError, DomainError, PivotError


def pivot(a: ExactMatrix, pos) -> ExactMatrix:
    """Gauss pivot: normalize entry ``pos`` to 1 and clear its column."""
    i, j = pos
    if not (0 <= i < a.rows and 0 <= j < a.cols):
        raise PivotError(f"pivot {pos} out of range for {a.rows}x{a.cols}")
    piv = a[i, j]
    if piv == 0:
        raise PivotError(f"pivot entry at {pos} is zero")
    inv = Fraction(1, 1) / piv
    new_rows = []
    base = [x * inv for x in a.row(i)]
    for ii in range(a.rows):
        if ii == i:
            new_rows.append(base)
            continue
        f = a[ii, j]
        if f == 0:
            new_rows.append(list(a.row(ii)))
        else:
            new_rows.append([x - f * y for x, y in zip(a.row(ii), base)])
    return ExactMatrix(new_rows)


def trim(a: ExactMatrix, pos) -> ExactMatrix:
    """Pivot at ``pos`` and delete the pivot row and column."""
    i, j = pos
    return pivot(a, pos).drop_row_col(i, j)


def resign(a: ExactMatrix, row_signs, col_signs) -> ExactMatrix:
    """diag(row_signs) . A . diag(col_signs); signs must be +-1."""
    if len(row_signs) != a.rows or len(col_signs) != a.cols:
        raise DimensionError("sign vector lengths differ from matrix shape")
    if any(s not in (-1, 1) for s in row_signs) or any(
        s not in (-1, 1) for s in col_signs
    ):
        raise DomainError("signs must be +-1")
    return ExactMatrix(
        [
            [rs * x * cs for x, cs in zip(row, col_signs)]
            for row, rs in zip(a.entries, row_signs)
        ]
    )


def row_magnitudes(a: ExactMatrix):
    """Per row, the common absolute value of its nonzero entries (1 for a zero
    row), or None where a row mixes magnitudes."""
    mags = []
    for row in a.entries:
        m = None
        for x in row:
            if x == 0:
                continue
            ax = abs(x)
            if m is None:
                m = ax
            elif m != ax:
                m = None
                break
        else:
            mags.append(m if m is not None else 1)
            continue
        mags.append(None)
    return mags


def is_essentially_pm1(a: ExactMatrix) -> bool:
    """True when each row's nonzero entries share one absolute value."""
    return all(m is not None for m in row_magnitudes(a))


def rescale(a: ExactMatrix) -> ExactMatrix:
    """Divide each row by its common entry magnitude, yielding a 0,+-1 matrix."""
    mags = row_magnitudes(a)
    if any(m is None for m in mags):
        raise DomainError("matrix is not essentially 0,+-1")
    return ExactMatrix(
        [[x / m if m != 1 else x for x in row] for row, m in zip(a.entries, mags)]
    )


def nega(a: ExactMatrix) -> ExactMatrix:
    """0,1 indicator of the -1 entries of a +-1 matrix; A = J - 2*nega(A)."""
    if not a.is_pm_one():
        raise DomainError("nega requires a +-1 matrix")
    return ExactMatrix([[1 if x == -1 else 0 for x in row] for row in a.entries])


@dataclass(frozen=True)
class CoreForm:
    """Sign-normal form of a +-1 matrix.

    ``resign(original, row_signs, col_signs)`` has an all-ones first row and
    first column; ``core`` is the 0,1 indicator of the -1 entries of its
    lower-right block, so the normalized matrix is [[1, 1^T], [1, J-2B]].
    Permutations are carried for interface completeness; this normalizer never
    needs them, so they are identities.
    """

    core: ExactMatrix
    row_signs: tuple
    col_signs: tuple
    row_perm: tuple
    col_perm: tuple

    def normalized(self) -> ExactMatrix:
        b = self.core
        first = [1] * (b.cols + 1)
        rows = [first]
        for r in b.entries:
            rows.append([1] + [1 - 2 * x for x in r])
        return ExactMatrix(rows)

    def reconstruct(self) -> ExactMatrix:
        return resign(self.normalized(), self.row_signs, self.col_signs)


def core_of(a: ExactMatrix) -> CoreForm:
    """Resign a +-1 matrix so row 1 and column 1 are all ones; extract the core.

    Columns are resigned first (using row 1), then rows (using column 1);
    the procedure is deterministic and independent of any prior resigning.
    """
    if not a.is_pm_one():
        raise DomainError("core extraction requires a +-1 matrix")
    if a.rows < 1 or a.cols < 1:
        raise DomainError("core extraction requires at least one row and column")
    col_signs = tuple(a[0, j] for j in range(a.cols))
    tmp = a.scale_cols(col_signs)
    row_signs = tuple(tmp[i, 0] for i in range(a.rows))
    norm = tmp.scale_rows(row_signs)
    block = norm.submatrix(range(1, a.rows), range(1, a.cols))
    core = nega(block) if block.rows and block.cols else ExactMatrix([])
    return CoreForm(
        core=core,
        row_signs=row_signs,
        col_signs=col_signs,
        row_perm=tuple(range(a.rows)),
        col_perm=tuple(range(a.cols)),
    )


def _require_zero_one(b: ExactMatrix):
    if not b.is_zero_one():
        raise DomainError("complement operations require a 0,1 matrix")


def row_complement(b: ExactMatrix, i: int) -> ExactMatrix:
    """Row i unchanged; every other row becomes its mod-2 sum with row i."""
    _require_zero_one(b)
    if not 0 <= i < b.rows:
        raise DimensionError(f"row index {i} out of range")
    base = b.row(i)
    return ExactMatrix(
        [
            list(row) if ii == i else [x ^ y for x, y in zip(row, base)]
            for ii, row in enumerate(b.entries)
        ]
    )


def col_complement(b: ExactMatrix, j: int) -> ExactMatrix:
    _require_zero_one(b)
    if not 0 <= j < b.cols:
        raise DimensionError(f"column index {j} out of range")
    return row_complement(b.transpose(), j).transpose()


def complement_member(b: ExactMatrix, i: int, j: int) -> ExactMatrix:
    """Orbit member indexed by (i, j); index 0 means "no complement" on that
    side, index k >= 1 complements at row/column k-1."""
    out = b
    if i:
        out = row_complement(out, i - 1)
    if j:
        out = col_complement(out, j - 1)
    return out


def complement_orbit(b: ExactMatrix, dedup: bool = False):
    """All (m+1)(n+1) matrices reachable by row/column complements.

    With ``dedup=True`` the list is reduced up to row/column permutation.
    """
    _require_zero_one(b)
    members = [
        complement_member(b, i, j)
        for i in range(b.rows + 1)
        for j in range(b.cols + 1)
    ]
    if not dedup:
        return members
    seen = {}
    for m in members:
        seen.setdefault(perm_canonical_key(m), m)
    return list(seen.values())


def perm_canonical_key(a: ExactMatrix):
    """Canonical key for equality up to row/column permutation.

    Sort columns lexicographically, then rows; cheap and deterministic at
    desk scale.
    """
    cols = sorted(tuple(r[j] for r in a.entries) for j in range(a.cols))
    rows = sorted(zip(*cols)) if cols else [() for _ in range(a.rows)]
    return (a.rows, a.cols, tuple(rows))


def equal_up_to_permutation(a: ExactMatrix, b: ExactMatrix) -> bool:
    return perm_canonical_key(a) == perm_canonical_key(b)
