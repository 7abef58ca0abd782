"""Exact rational linear feasibility via a dense two-phase simplex.

Strict inequalities are handled by slack maximization: each strict row gets a
shared slack variable t, and the system is strictly feasible exactly when the
maximal t is positive.  Bland's rule guarantees termination; everything is
Fraction arithmetic, so identical input yields identical pivots and output.
Problem sizes here stay small (at most a few hundred rows), so a dense
tableau is the simplest correct choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError

LEQ = "<="
LT = "<"
EQ = "="


@dataclass(frozen=True)
class LinearSystem:
    """Rows of (coefficients, relation, rhs) over a fixed variable count."""

    nvars: int
    rows: tuple

    @staticmethod
    def build(nvars, rows):
        out = []
        for coeffs, rel, rhs in rows:
            if len(coeffs) != nvars:
                raise DimensionError("coefficient length differs from nvars")
            if rel not in (LEQ, LT, EQ):
                raise DimensionError(f"unknown relation {rel!r}")
            out.append((tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs)))
        return LinearSystem(nvars, tuple(out))


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: tuple | None        # assignment satisfying every row (strictly for <)
    slack: Fraction | None     # maximized common slack of the strict rows
    certificate: dict | None   # Farkas data when the weak system is infeasible

    @property
    def status(self):
        return "feasible" if self.feasible else "infeasible"


def _pivot(tab, basis, r, c):
    pr = tab[r]
    inv = 1 / pr[c]
    tab[r] = [x * inv for x in pr]
    pr = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [x - f * y for x, y in zip(row, pr)]
    basis[r] = c


def _simplex_phase(tab, basis, costs, ncols):
    """Minimize costs over the current tableau (Bland's rule).

    Returns "optimal" or "unbounded"; the tableau/basis are updated in place.
    """
    m = len(tab)
    while True:
        # Reduced costs priced against the basic costs.
        ybar = [costs[basis[i]] for i in range(m)]
        entering = -1
        for j in range(ncols):
            red = costs[j]
            for i in range(m):
                if tab[i][j] != 0 and ybar[i] != 0:
                    red -= ybar[i] * tab[i][j]
            if red < 0:
                entering = j
                break
        if entering < 0:
            return "optimal"
        leaving = -1
        best = None
        for i in range(m):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            return "unbounded"
        _pivot(tab, basis, leaving, entering)


def _solve_standard(a_rows, b, costs):
    """min costs . z  subject to  a_rows . z = b, z >= 0.

    Returns (status, z, farkas_y) with status in {"optimal", "infeasible",
    "unbounded"}.  On infeasibility, farkas_y satisfies y.A <= 0 and y.b > 0.
    """
    m = len(a_rows)
    n = len(costs)
    tab = []
    rhs = []
    for row, bi in zip(a_rows, b):
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        tab.append(list(row))
        rhs.append(bi)
    # Artificial columns.
    for i in range(m):
        tab[i] = tab[i] + [1 if k == i else 0 for k in range(m)] + [rhs[i]]
    basis = [n + i for i in range(m)]
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    status = _simplex_phase(tab, basis, phase1, n + m)
    assert status == "optimal"  # phase 1 is always bounded below by 0
    value = sum(tab[i][-1] for i in range(m) if basis[i] >= n)
    if value > 0:
        # Farkas certificate from the phase-1 duals on the artificial columns.
        y = [
            sum(phase1[basis[i]] * tab[i][n + k] for i in range(m))
            for k in range(m)
        ]
        # Undo the row sign flips applied above.
        signed = []
        for k, (row, bi) in enumerate(zip(a_rows, b)):
            signed.append(-y[k] if bi < 0 else y[k])
        return "infeasible", None, signed
    # Drive leftover artificials out of the basis where possible.
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    status = _simplex_phase(tab, basis, list(costs), n)
    z = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        z[bv] = tab[i][-1]
    if status == "unbounded":
        return "unbounded", z, None
    return "optimal", z, None


def solve(system: LinearSystem) -> FeasibilityResult:
    """Decide the system exactly; strict rows via maximized common slack.

    The weak relaxation (strict rows read as <=) is solved first; when it is
    feasible, the common slack t of the strict rows is maximized (capped at 1
    so the LP stays bounded).  Feasible means t > 0, i.e. every strict row
    holds with room to spare.  An unbounded slack is reported as feasible
    with the cap value as witness.
    """
    n = system.nvars
    has_strict = any(rel == LT for _, rel, _ in system.rows)
    # Variables: x (free, split into +/-), then t, then one slack per <=/< row.
    nslacks = sum(1 for _, rel, _ in system.rows if rel != EQ)
    ncols = 2 * n + 1 + nslacks
    t_col = 2 * n
    a_rows, b = [], []
    slack_at = 0
    for coeffs, rel, rhs in system.rows:
        row = [Fraction(0)] * ncols
        for j, c in enumerate(coeffs):
            row[j] = c
            row[n + j] = -c
        if rel == LT:
            row[t_col] = Fraction(1)
        if rel != EQ:
            row[t_col + 1 + slack_at] = Fraction(1)
            slack_at += 1
        a_rows.append(row)
        b.append(Fraction(rhs))
    # Cap: t <= 1.
    cap = [Fraction(0)] * ncols
    cap[t_col] = Fraction(1)
    a_rows.append(cap)
    b.append(Fraction(1))
    # Add the cap's slack column.
    for row in a_rows[:-1]:
        row.append(Fraction(0))
    a_rows[-1].append(Fraction(1))
    ncols += 1

    costs = [Fraction(0)] * ncols
    costs[t_col] = Fraction(-1)  # maximize t
    status, z, farkas = _solve_standard(a_rows, b, costs)
    if status == "infeasible":
        # Certificate over the original rows (drop the internal cap row and
        # flip sign so inequality multipliers come out nonnegative).
        cert = {"farkas": tuple(-farkas[i] for i in range(len(system.rows)))}
        if not verify_farkas(system, cert):
            cert = {"farkas": None}
        return FeasibilityResult(False, None, None, cert)
    point = tuple(z[j] - z[n + j] for j in range(n))
    slack = z[t_col]
    if has_strict and slack <= 0:
        return FeasibilityResult(False, None, Fraction(0), {"max_strict_slack": 0})
    _verify_point(system, point, strict=True)
    return FeasibilityResult(True, point, slack, None)


def _verify_point(system: LinearSystem, point, strict=False):
    for coeffs, rel, rhs in system.rows:
        v = sum(c * x for c, x in zip(coeffs, point))
        if rel == EQ and v != rhs:
            raise AssertionError("solver returned a point violating an equality")
        if rel == LEQ and v > rhs:
            raise AssertionError("solver returned a point violating an inequality")
        if rel == LT and strict and v >= rhs:
            raise AssertionError("solver returned a point violating a strict row")


def verify_farkas(system: LinearSystem, farkas) -> bool:
    """Check a Farkas certificate for the weak relaxation of the system.

    The certificate is over the standard-form rows; y has one entry per row
    of the system (plus the internal cap row, ignored here).  Validity check:
    nonnegative combination of the weak rows yields 0 . x <= negative.
    """
    y = farkas["farkas"]
    rows = list(system.rows)
    combo = [Fraction(0)] * system.nvars
    rhs = Fraction(0)
    for (coeffs, rel, r), yi in zip(rows, y):
        if rel != EQ and yi < 0:
            return False
        for j, c in enumerate(coeffs):
            combo[j] += yi * c
        rhs += yi * r
    return all(c == 0 for c in combo) and rhs < 0
