"""Decomposition of full-row-rank te-sets into mutually-tu bricks.

A full-row-rank 0,+-1 te-set splits uniquely into a tu-set, te-laces of size
at least three, and thin/thick interlaces; the interlaces are exactly the
support classes of rows appearing in size-two laces (inside a full-row-rank
set, same-support rows are pairwise non-opposite, hence pairwise laces).
Size-two laces are canonically reported as thin interlaces of size two; the
equideterminant formula is invariant under that choice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import (
    TE_LACE,
    THICK_INTERLACE,
    THIN_INTERLACE,
    TU_SET,
    brick_type,
    eqdet,
    find_te_violation,
    minimal_non_tu_row_subsets,
    support,
)
from .core import ExactMatrix, rank
from .errors import DecompositionError, DomainError, RankError


@dataclass(frozen=True)
class Decomposition:
    source: ExactMatrix
    tu_set: tuple           # row indices in no lace
    laces: tuple            # tuples of row indices, each of size >= 3
    thin: tuple             # tuples of row indices (size >= 2)
    thick: tuple            # tuples of row indices
    minimal_non_tu: tuple = field(default=())

    def parts(self):
        out = []
        if self.tu_set:
            out.append((TU_SET, self.tu_set))
        out.extend((TE_LACE, l) for l in self.laces)
        out.extend((THIN_INTERLACE, s) for s in self.thin)
        out.extend((THICK_INTERLACE, t) for t in self.thick)
        return out

    def brick_of_row(self, i: int):
        for tag, idx in self.parts():
            if i in idx:
                return tag, idx
        raise KeyError(i)


def find_te_laces(m: ExactMatrix):
    """All inclusion-minimal non-TU row subsets, by increasing size.

    Works on any 0,+-1 matrix (rank-deficient ones included); inside a
    te-set these subsets are exactly its te-laces.
    """
    if not m.is_zero_pm_one():
        raise DomainError("lace search requires 0,+-1 entries")
    return [tuple(s) for s in minimal_non_tu_row_subsets(m)]


def decompose_te_set(m: ExactMatrix) -> Decomposition:
    """Partition a full-row-rank 0,+-1 te-set into mutually-tu bricks.

    Raises DecompositionError (with a witness) when the input is not a
    te-set or the candidate partition fails verification.
    """
    if not m.is_zero_pm_one():
        raise DomainError("decomposition requires 0,+-1 entries")
    if rank(m) < m.rows:
        raise RankError("decomposition requires full row rank")

    laces = find_te_laces(m)
    in_lace = set().union(*map(set, laces)) if laces else set()
    tu_rows = tuple(i for i in range(m.rows) if i not in in_lace)

    pair_rows = sorted({i for l in laces if len(l) == 2 for i in l})
    big_laces = [l for l in laces if len(l) >= 3]

    # Support classes of the rows involved in size-two laces.
    classes: dict = {}
    for i in pair_rows:
        classes.setdefault(support(m.row(i)), []).append(i)
    interlaces = [tuple(sorted(v)) for v in classes.values()]
    interlaces.sort()

    def _fail(msg):
        raise DecompositionError(msg, witness=find_te_violation(m))

    # Rows of big laces must not also sit in pairs, and big laces must be
    # pairwise disjoint: intersecting laces only happen at size two.
    pair_set = set(pair_rows)
    seen = set()
    for l in big_laces:
        if pair_set & set(l) or seen & set(l):
            _fail("intersecting laces of size above two; not a te-set")
        seen |= set(l)

    thin, thick = [], []
    for idx in interlaces:
        try:
            bt = brick_type(m.take_rows(idx))
        except RankError:
            bt = None
        if bt is not None and (
            bt.tag == THIN_INTERLACE or (bt.tag == TE_LACE and bt.size == 2)
        ):
            thin.append(idx)
        elif bt is not None and bt.tag == THICK_INTERLACE:
            thick.append(idx)
        else:
            _fail(f"support class {idx} is not a te-interlace; not a te-set")

    for l in big_laces:
        bt = brick_type(m.take_rows(l))
        if bt is None or bt.tag != TE_LACE:
            _fail(f"minimal non-TU subset {l} is not a te-lace; not a te-set")

    d = Decomposition(
        source=m,
        tu_set=tu_rows,
        laces=tuple(sorted(big_laces)),
        thin=tuple(sorted(thin)),
        thick=tuple(sorted(thick)),
        minimal_non_tu=tuple(laces),
    )
    ok, witness = verify_mutually_tu(d)
    if not ok:
        raise DecompositionError(
            f"bricks are not mutually totally unimodular (offending subset {witness})",
            witness=witness,
        )
    return d


def verify_mutually_tu(d: Decomposition):
    """Certify the mutually-tu property of a decomposition.

    Every inclusion-minimal non-TU row subset of the source must lie inside
    a single brick and be either a registered lace or a pair within one
    interlace; any non-TU transversal set contains such a minimal subset, so
    this is equivalent to the defining property.  Returns (ok, witness).
    """
    minimal = d.minimal_non_tu or tuple(find_te_laces(d.source))
    lace_set = {frozenset(l) for l in d.laces}
    interlace_sets = [frozenset(s) for s in list(d.thin) + list(d.thick)]
    for sub in minimal:
        fs = frozenset(sub)
        if fs in lace_set:
            continue
        if len(sub) == 2 and any(fs <= s for s in interlace_sets):
            continue
        return False, tuple(sub)
    return True, None


def eqdet_from_decomposition(d: Decomposition) -> int:
    """Closed form: 2 ** (#laces + sum(|thin|-1) + sum(|thick|))."""
    e = (
        len(d.laces)
        + sum(len(s) - 1 for s in d.thin)
        + sum(len(t) for t in d.thick)
    )
    return 2**e


def eqdet_direct(m: ExactMatrix) -> int:
    """Equideterminant computed from the matrix itself."""
    return int(eqdet(m))
