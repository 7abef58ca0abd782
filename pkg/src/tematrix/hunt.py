"""Exhaustive search for full-dimensional thick te-interlaces by size.

A square +-1 matrix is a thick te-interlace exactly when the 0,1 core of its
sign-normal form is complement minimally non-TU, and such cores have odd
size.  The search therefore enumerates minimally non-TU 0,1 cores of size
n-1 (with the classical necessary filters: even row/column supports, entry
sum 2 mod 4, determinant +-2, and total unimodularity of every proper row
prefix pruning the generation tree), keeps the complement-minimally-non-TU
ones, lifts each to the +-1 matrix [[1, 1^T], [1, J-2B]], and deduplicates
up to resigning and row/column permutation via an exact canonical form.

Sizes 4 and 6 finish in seconds; size 8 is a long-running mode sharded by
the first core row with a resumable newline-delimited JSON checkpoint.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from .calculus import complement_member
from .classify import brick_type, is_min_non_tu, THICK_INTERLACE
from .core import ExactMatrix
from .errors import DomainError, UnsupportedSizeError


# ---------------------------------------------------------------------------
# canonical forms under resigning + row/column permutation
# ---------------------------------------------------------------------------


def _block_key(bits_rows, ncols):
    """Min over column permutations of the sorted row-bitmask tuple."""
    best = None
    cols = list(range(ncols))
    for perm in itertools.permutations(cols):
        permuted = tuple(
            sorted(
                sum(((row >> c) & 1) << t for t, c in enumerate(perm))
                for row in bits_rows
            )
        )
        if best is None or permuted < best:
            best = permuted
    return best


def _sum_profile(bits_rows, ncols):
    row_sums = tuple(sorted(bin(r).count("1") for r in bits_rows))
    col_sums = tuple(
        sorted(sum((r >> c) & 1 for r in bits_rows) for c in range(ncols))
    )
    return row_sums, col_sums


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative of a +-1 square matrix under resigning and
    row/column permutation; equal keys exactly characterize equivalence."""

    size: int
    key: tuple

    @property
    def matrix(self) -> ExactMatrix:
        n = self.size
        rows = [[1] * n]
        for bits in self.key:
            rows.append([1] + [(-1 if (bits >> c) & 1 else 1) for c in range(n - 1)])
        return ExactMatrix(rows)


def canonical_form(a: ExactMatrix) -> CanonicalForm:
    """Exact canonical form of a square +-1 matrix.

    For each choice of a reference row r and column c, the sign-normalized
    entry grid A[i][c] A[r][c] A[i][j] A[r][j] is independent of any prior
    resigning and has all-ones row r and column c; the key is the best
    remaining 0,1 block over all (r, c) and all residual permutations (rows
    by sorting, columns exactly).  A cheap sorted row/column-sum profile
    prefilters the exact minimization.
    """
    if not a.is_pm_one() or not a.is_square:
        raise DomainError("canonical form requires a square +-1 matrix")
    n = a.rows
    e = a.entries
    best = None
    best_profile = None
    for r in range(n):
        for c in range(n):
            bits_rows = []
            for i in range(n):
                if i == r:
                    continue
                prod_ic = e[i][c] * e[r][c]
                bits = 0
                t = 0
                for j in range(n):
                    if j == c:
                        continue
                    if prod_ic * e[i][j] * e[r][j] == -1:
                        bits |= 1 << t
                    t += 1
                bits_rows.append(bits)
            profile = _sum_profile(bits_rows, n - 1)
            if best is not None and best_profile is not None and profile > best_profile:
                continue
            key = _block_key(bits_rows, n - 1)
            if best is None or (profile, key) < (best_profile, best):
                best = key
                best_profile = profile
    return CanonicalForm(n, best)


def core_canonical_key(bits_rows, ncols):
    """Canonical key of a 0,1 matrix under row/column permutation only."""
    return _block_key(bits_rows, ncols)


# ---------------------------------------------------------------------------
# minimally non-TU core enumeration
# ---------------------------------------------------------------------------


def _det_int(rows):
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
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
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _row_bits_to_list(bits, ncols):
    return [(bits >> c) & 1 for c in range(ncols)]


def _new_row_keeps_tu(old_rows, new_row, ncols):
    """All square minors using the new row stay in {0,+-1}; with the old
    rows already TU this keeps the grown matrix TU."""
    j = len(old_rows)
    for s in range(2, j + 2):
        for subset in itertools.combinations(range(j), s - 1):
            chosen = [old_rows[i] for i in subset] + [new_row]
            for cols in itertools.combinations(range(ncols), s):
                sub = [[row[c] for c in cols] for row in chosen]
                if abs(_det_int(sub)) > 1:
                    return False
    return True


def enumerate_min_non_tu_cores(k: int, first_row=None, progress=None):
    """All k x k minimally non-TU 0,1 matrices up to row/column permutation.

    Only odd k is meaningful here: complement minimally non-TU matrices (the
    thick-interlace cores) have odd size, so even k is refused.  Rows are
    generated as strictly increasing bitmasks (even weight, nonzero), the
    partial matrix is kept TU at every depth, and leaves pass the classical
    necessary filters before the full definition check.

    ``first_row`` restricts the search to one shard (for parallel runs);
    ``progress`` is an optional callable fed candidate counts.
    """
    if k % 2 == 0:
        raise UnsupportedSizeError(
            "even-size cores cannot be complement minimally non-TU; "
            "only odd sizes are searched"
        )
    even_rows = [
        v for v in range(1, 1 << k) if bin(v).count("1") % 2 == 0 and v != 0
    ]
    found = {}
    examined = 0

    def leaf(bit_rows):
        nonlocal examined
        examined += 1
        col_sums = [sum((r >> c) & 1 for r in bit_rows) for c in range(k)]
        if any(s % 2 for s in col_sums):
            return
        if sum(col_sums) % 4 != 2:
            return
        rows01 = [_row_bits_to_list(r, k) for r in bit_rows]
        if abs(_det_int(rows01)) != 2:
            return
        m = ExactMatrix(rows01)
        if not is_min_non_tu(m):
            return
        key = core_canonical_key(bit_rows, k)
        found.setdefault(key, m)

    def rec(bit_rows, rows01, start):
        if len(bit_rows) == k:
            leaf(bit_rows)
            return
        remaining = k - len(bit_rows)
        last = len(bit_rows) + 1 == k
        for idx in range(start, len(even_rows) - remaining + 1):
            v = even_rows[idx]
            row = _row_bits_to_list(v, k)
            # Proper row prefixes of a minimally non-TU matrix are TU; the
            # full matrix itself is not, so the last row is not pruned.
            if rows01 and not last and not _new_row_keeps_tu(rows01, row, k):
                continue
            rec(bit_rows + [v], rows01 + [row], idx + 1)
        if progress is not None:
            progress(examined)

    if first_row is not None:
        if first_row not in even_rows:
            return []
        base = first_row
        rec([base], [_row_bits_to_list(base, k)], even_rows.index(base) + 1)
    else:
        rec([], [], 0)
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# thick interlace search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    size: int
    representatives: tuple       # CanonicalForm, pairwise inequivalent
    candidates_examined: int
    core_classes_examined: int
    elapsed: float = field(compare=False, default=0.0)

    def as_dict(self):
        return {
            "size": self.size,
            "representatives": [
                [list(map(int, row)) for row in rep.matrix.entries]
                for rep in self.representatives
            ],
            "candidatesExamined": self.candidates_examined,
            "coreClassesExamined": self.core_classes_examined,
        }


def lift_core(core: ExactMatrix) -> ExactMatrix:
    """The +-1 matrix [[1, 1^T], [1, J-2B]] over a 0,1 core B."""
    if not core.is_zero_one():
        raise DomainError("core must be a 0,1 matrix")
    n = core.rows + 1
    rows = [[1] * n]
    for r in core.entries:
        rows.append([1] + [1 - 2 * x for x in r])
    return ExactMatrix(rows)


def is_complement_min_non_tu_fast(core: ExactMatrix) -> bool:
    """Orbit filter with the cheap determinant test first."""
    for i in range(core.rows + 1):
        for j in range(core.cols + 1):
            member = complement_member(core, i, j)
            if abs(_det_int(member.row_list())) != 2:
                return False
    for i in range(core.rows + 1):
        for j in range(core.cols + 1):
            if not is_min_non_tu(complement_member(core, i, j)):
                return False
    return True


def _shards(k):
    return [
        v for v in range(1, 1 << k) if bin(v).count("1") % 2 == 0 and v != 0
    ]


def _shard_worker(args):
    k, first_row = args
    cores = enumerate_min_non_tu_cores(k, first_row=first_row)
    return first_row, [[list(map(int, r)) for r in c.entries] for c in cores]


def enumerate_thick_interlaces(
    n: int, jobs: int = 1, checkpoint=None, resume: bool = False
) -> SearchReport:
    """Search all full-dimensional thick te-interlaces of size n.

    Odd n is impossible (the core would have even size) and is refused.
    Cores come from the sharded minimally-non-TU enumeration; survivors of
    the complement-orbit filter are lifted, canonicalized, and verified as
    thick interlaces.  With ``checkpoint`` set, finished shards are logged
    as newline-delimited JSON and skipped on ``resume``.
    """
    if n % 2:
        raise UnsupportedSizeError(
            "thick te-interlaces have even size (their cores are odd)"
        )
    t0 = time.monotonic()
    k = n - 1
    done = {}
    if resume and checkpoint is not None:
        try:
            with open(checkpoint) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    if rec.get("status") == "done":
                        done[tuple(rec["shardPrefix"])] = rec.get("cores", [])
        except FileNotFoundError:
            pass
    shard_args = [(k, v) for v in _shards(k) if (v,) not in done]
    results = dict(done)

    def log_shard(first_row, cores):
        results[(first_row,)] = cores
        if checkpoint is not None:
            with open(checkpoint, "a") as fh:
                fh.write(
                    json.dumps(
                        {
                            "shardPrefix": [first_row],
                            "status": "done",
                            "cores": cores,
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )

    if jobs > 1 and len(shard_args) > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            for first_row, cores in pool.imap_unordered(_shard_worker, shard_args):
                log_shard(first_row, cores)
    else:
        for args in shard_args:
            first_row, cores = _shard_worker(args)
            log_shard(first_row, cores)

    core_mats = []
    seen_core_keys = set()
    for shard in sorted(results):
        for rows in results[shard]:
            m = ExactMatrix(rows)
            bits = [sum(x << c for c, x in enumerate(r)) for r in rows]
            key = core_canonical_key(bits, k)
            if key in seen_core_keys:
                continue
            seen_core_keys.add(key)
            core_mats.append(m)

    reps = {}
    candidates = 0
    for core in core_mats:
        candidates += 1
        if not is_complement_min_non_tu_fast(core):
            continue
        lifted = lift_core(core)
        bt = brick_type(lifted)
        if bt is None or bt.tag != THICK_INTERLACE:
            continue
        cf = canonical_form(lifted)
        reps.setdefault(cf.key, cf)
    return SearchReport(
        size=n,
        representatives=tuple(reps[key] for key in sorted(reps)),
        candidates_examined=candidates,
        core_classes_examined=len(core_mats),
        elapsed=time.monotonic() - t0,
    )


def raw_enumerate_thick(n: int) -> tuple:
    """Independent brute-force oracle: scan every +-1 matrix with all-ones
    first row and column, keep the thick interlaces, canonicalize.

    Exponential in (n-1)^2; intended as the n=4 cross-check of the
    core-based search.
    """
    if n % 2:
        return ()
    inner = n - 1
    reps = {}
    for bits in range(1 << (inner * inner)):
        rows = [[1] * n]
        for i in range(inner):
            row = [1]
            for j in range(inner):
                row.append(-1 if (bits >> (i * inner + j)) & 1 else 1)
            rows.append(row)
        m = ExactMatrix(rows)
        if abs(_det_int(rows)) != 1 << n:
            continue
        bt = brick_type(m)
        if bt is not None and bt.tag == THICK_INTERLACE:
            cf = canonical_form(m)
            reps.setdefault(cf.key, cf)
    return tuple(reps[key] for key in sorted(reps))
