"""Recognition predicates: equimodular, (totally) unimodular, totally
equimodular, minimally non-TU, complement classes, and brick typing.

The workhorse reduction: a full-row-rank matrix A with pivot columns J0 in
its reduced echelon form R satisfies |det(A^J)| = |det(A^{J0})| * |m| where m
runs over the square minors (all sizes, including the empty one) of the
non-pivot block of R.  Hence A is equimodular exactly when that block is
totally unimodular, and then eqdet(A) = |det(A^{J0})|.

All totality predicates are exponential-time brute force with early exits;
the intended scale is at most ~10 rows by ~14 columns.  Correctness over
speed: polynomial recognition of total equimodularity is an open problem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .calculus import is_essentially_pm1, rescale, trim
from .core import ExactMatrix, _rref, det, maximal_minors, rank
from .errors import DomainError, RankError

TU_SET = "tu-set"
TE_LACE = "te-lace"
THIN_INTERLACE = "thin-interlace"
THICK_INTERLACE = "thick-interlace"


@dataclass(frozen=True)
class BrickType:
    tag: str
    size: int
    equideterminant: int


def support(vec) -> frozenset:
    return frozenset(i for i, x in enumerate(vec) if x != 0)


# ---------------------------------------------------------------------------
# equimodularity
# ---------------------------------------------------------------------------


def _echelon_block(m: ExactMatrix):
    """(non-pivot block of RREF, |det of pivot-column submatrix|, full_rank)."""
    rref, pivots, det_block = _rref(m)
    if len(pivots) < m.rows:
        return None, None, False
    nonpiv = [c for c in range(m.cols) if c not in pivots]
    block = ExactMatrix([[rref[i][c] for c in nonpiv] for i in range(m.rows)])
    return block, abs(det_block), True


def is_equimodular(m: ExactMatrix) -> bool:
    """Full row rank and all nonzero maximal minors share one absolute value."""
    if m.rows == 0:
        return True
    block, _, full = _echelon_block(m)
    if not full:
        return False
    return is_totally_unimodular(block)


def eqdet(m: ExactMatrix):
    """The common absolute value of the nonzero maximal minors."""
    if m.rows == 0:
        return 1
    block, d, full = _echelon_block(m)
    if not full:
        raise RankError("eqdet requires full row rank")
    if not is_totally_unimodular(block):
        raise DomainError("matrix is not equimodular")
    return int(d) if d.denominator == 1 else d


def is_unimodular_set(m: ExactMatrix) -> bool:
    """Full row rank with all nonzero maximal minors equal to +-1."""
    if m.rows == 0:
        return True
    block, d, full = _echelon_block(m)
    return full and d == 1 and is_totally_unimodular(block)


# ---------------------------------------------------------------------------
# total unimodularity
# ---------------------------------------------------------------------------


def _full_size_minors_ok(m: ExactMatrix) -> bool:
    """All rows x rows minors in {0,+-1}; assumes proper row subsets are TU."""
    if m.rows > m.cols:
        return True
    for _, v in maximal_minors(m):
        if not (v == 0 or v == 1 or v == -1):
            return False
    return True


def minimal_non_tu_row_subsets(m: ExactMatrix, max_size=None):
    """All inclusion-minimal row subsets whose matrix is not TU.

    Subsets are scanned by increasing size, lexicographically within a size;
    supersets of found subsets are pruned.  When a tested subset fails, all
    of its proper subsets are already known TU, so only full-row-size square
    minors need checking.
    """
    found = []
    n = m.rows
    limit = min(n, max_size) if max_size is not None else n
    for size in range(1, limit + 1):
        for subset in itertools.combinations(range(n), size):
            sset = set(subset)
            if any(f <= sset for f in found):
                continue
            if not _full_size_minors_ok(m.take_rows(subset)):
                found.append(frozenset(subset))
    return [tuple(sorted(f)) for f in found]


def is_totally_unimodular(m: ExactMatrix) -> bool:
    """Every square submatrix has determinant 0 or +-1."""
    # Cheap entry screen: 1x1 minors.
    for row in m.entries:
        for x in row:
            if x != 0 and abs(x) != 1:
                return False
    return not minimal_non_tu_row_subsets(m)


def find_tu_violation(m: ExactMatrix):
    """Minimal violating square submatrix as (rows, cols), or None if TU.

    Minimal by size, then lexicographic row order, then lexicographic column
    order, so goldens are reproducible.
    """
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if x != 0 and abs(x) != 1:
                return (i,), (j,)
    bad = minimal_non_tu_row_subsets(m)
    if not bad:
        return None
    rows = min(bad, key=lambda s: (len(s), s))
    sub = m.take_rows(rows)
    k = len(rows)
    for cols in itertools.combinations(range(m.cols), k):
        v = det(sub.take_cols(cols))
        if not (v == 0 or v == 1 or v == -1):
            return rows, cols
    raise AssertionError("violating row subset without violating columns")


def is_min_non_tu(m: ExactMatrix) -> bool:
    """Square, not TU, with every proper submatrix TU.

    Fast necessary filters come first: entries 0,+-1, each row and column
    with an even number of nonzeroes, entry sum congruent to 2 mod 4, and
    determinant +-2 (all classical facts about minimally non-TU matrices).
    """
    if not m.is_square or m.rows == 0:
        return False
    if not m.is_zero_pm_one():
        return False
    for row in m.entries:
        if sum(1 for x in row if x) % 2:
            return False
    for j in range(m.cols):
        if sum(1 for x in m.col(j) if x) % 2:
            return False
    total = sum(x for row in m.entries for x in row)
    if total % 4 != 2:
        return False
    if abs(det(m)) != 2:
        return False
    # TU is hereditary, so proper submatrices are covered by the one-row- and
    # one-column-deleted matrices.
    n = m.rows
    for i in range(n):
        if not is_totally_unimodular(m.take_rows([r for r in range(n) if r != i])):
            return False
    for j in range(n):
        if not is_totally_unimodular(m.take_cols([c for c in range(n) if c != j])):
            return False
    return True


# ---------------------------------------------------------------------------
# total equimodularity
# ---------------------------------------------------------------------------


def find_te_violation(m: ExactMatrix):
    """First (size, then lex) independent row subset that is not equimodular,
    or None when the matrix is totally equimodular."""
    n = m.rows
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            sub = m.take_rows(subset)
            block, _, full = _echelon_block(sub)
            if not full:
                continue
            if not is_totally_unimodular(block):
                return subset
    return None


def is_totally_equimodular(m: ExactMatrix) -> bool:
    """Brute force: every linearly independent row subset is equimodular."""
    return find_te_violation(m) is None


def is_totally_equimodular_by_trims(m: ExactMatrix) -> bool:
    """Trim-recursive test: a matrix is totally equimodular iff every
    iterated trim (at any position, after dropping zero rows and rescaling
    rows to 0,+-1) stays essentially 0,+-1.

    Verdicts are memoized per call on exact matrix content; trims commute,
    so different trim orders share subproblems.
    """
    memo: dict = {}

    def rec(a: ExactMatrix) -> bool:
        live = [row for row in a.entries if any(x != 0 for x in row)]
        a = ExactMatrix(live)
        if a.rows == 0 or a.cols == 0:
            return True
        key = a.entries
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not is_essentially_pm1(a):
            memo[key] = False
            return False
        b = rescale(a)
        memo[key] = True  # provisional; cycles impossible (strict shrink)
        for i in range(b.rows):
            for j in range(b.cols):
                if b[i, j] != 0:
                    if not rec(trim(b, (i, j))):
                        memo[key] = False
                        return False
        return True

    return rec(m)


def check_trim_equimodularity(m: ExactMatrix, row_index: int) -> bool:
    """Whether every trim along the support of the given 0,+-1 row is
    equimodular; agrees with is_equimodular on full-row-rank input."""
    row = m.row(row_index)
    if any(x not in (-1, 0, 1) for x in row):
        raise DomainError("trim row must be 0,+-1")
    supp = [j for j, x in enumerate(row) if x != 0]
    if not supp:
        raise DomainError("trim row must be nonzero")
    return all(is_equimodular(trim(m, (row_index, j))) for j in supp)


# ---------------------------------------------------------------------------
# complement classes
# ---------------------------------------------------------------------------


def _orbit_members(b: ExactMatrix):
    from .calculus import complement_member

    for i in range(b.rows + 1):
        for j in range(b.cols + 1):
            yield complement_member(b, i, j)


def is_complement_tu(b: ExactMatrix) -> bool:
    """Every member of the complement orbit is totally unimodular."""
    if not b.is_zero_one():
        raise DomainError("complement predicates require a 0,1 matrix")
    return all(is_totally_unimodular(mem) for mem in _orbit_members(b))


def is_complement_min_non_tu(b: ExactMatrix) -> bool:
    """Every member of the complement orbit is minimally non-TU."""
    if not b.is_zero_one():
        raise DomainError("complement predicates require a 0,1 matrix")
    if not b.is_square:
        return False
    return all(is_min_non_tu(mem) for mem in _orbit_members(b))


# ---------------------------------------------------------------------------
# brick typing
# ---------------------------------------------------------------------------


def _pair_is_lace(r, s) -> bool:
    """Two independent 0,+-1 rows form a te-lace iff they share support and
    are not negatives of each other."""
    if support(r) != support(s):
        return False
    return not (all(x == y for x, y in zip(r, s)) or all(x == -y for x, y in zip(r, s)))


def brick_type(m: ExactMatrix):
    """Classify an independent 0,+-1 row set as a brick, or return None.

    Size-2 same-support pairs come out as te-laces here; the decomposition
    module re-tags them as thin interlaces of size two.
    """
    if not m.is_zero_pm_one():
        raise DomainError("brick typing requires 0,+-1 entries")
    if rank(m) < m.rows:
        raise RankError("brick typing requires independent rows")
    n = m.rows
    bad = minimal_non_tu_row_subsets(m)
    if not bad:
        return BrickType(TU_SET, n, 1)
    if bad == [tuple(range(n))]:
        if is_totally_equimodular(m):
            return BrickType(TE_LACE, n, int(eqdet(m)))
        return None
    # Interlace pattern: every pair of rows is a lace.
    if len(bad) == n * (n - 1) // 2 and all(len(s) == 2 for s in bad):
        rows = m.entries
        if all(
            _pair_is_lace(rows[i], rows[j])
            for i in range(n)
            for j in range(i + 1, n)
        ) and is_totally_equimodular(m):
            d = int(eqdet(m))
            if d == 2 ** (n - 1):
                return BrickType(THIN_INTERLACE, n, d)
            if d == 2**n:
                return BrickType(THICK_INTERLACE, n, d)
        return None
    return None
