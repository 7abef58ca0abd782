"""Hilbert bases of simplicial cones generated by te-sets.

Two independent routes are provided and cross-checked in the tests:

* ``hilbert_oracle`` -- brute force.  Every nontrivial Hilbert basis element
  lies among the integer points of the half-open zonotope of the generators
  (whose cardinality equals gcddet of the generator matrix), and a zonotope
  point is irreducible iff it is not a sum of two nonzero zonotope points:
  the simplicial lambda-coordinates of any summand are dominated by those of
  the sum, which are below 1 componentwise.

* ``hilbert_basis_brick`` / ``hilbert_basis_te_cone`` -- the closed forms per
  brick type, glued across bricks by lattice orthogonality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .classify import (
    TE_LACE,
    THICK_INTERLACE,
    THIN_INTERLACE,
    TU_SET,
    BrickType,
    brick_type,
)
from .core import ExactMatrix, _rref, gcddet, inverse, rank, solve
from .decompose import Decomposition, decompose_te_set
from .errors import (
    ClassificationError,
    DomainError,
    MembershipError,
    RankError,
    WrongCaseError,
)

GENERATOR = "generator"
LACE_HALF_SUM = "lace-half-sum"
PAIR_HALF_SUM = "pair-half-sum"
QUARTER_SUM = "quarter-sum"
SKEWED_QUARTER_SUM = "skewed-quarter-sum"
ORACLE = "oracle"


@dataclass(frozen=True)
class TeCone:
    """A simplicial cone given by its primitive, independent generator rows."""

    generators: ExactMatrix

    def __post_init__(self):
        g = self.generators
        if not g.is_integer():
            raise DomainError("cone generators must be integer vectors")
        if rank(g) < g.rows:
            raise RankError("cone generators must be linearly independent")
        from math import gcd

        for row in g.entries:
            c = 0
            for x in row:
                c = gcd(c, abs(x))
            if c != 1:
                raise DomainError("cone generators must be primitive")

    @property
    def dim(self) -> int:
        return self.generators.rows

    @property
    def ambient_dim(self) -> int:
        return self.generators.cols

    def lambda_coords(self, x):
        """Coordinates of x in terms of the generators, or None if outside
        their span.  Unique because the cone is simplicial."""
        return solve(self.generators, x)

    def contains(self, x) -> bool:
        lam = self.lambda_coords(x)
        return lam is not None and all(c >= 0 for c in lam)


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple        # integer vectors (tuples)
    origin_tags: tuple     # parallel to elements

    def as_set(self):
        return frozenset(self.elements)

    def nontrivial(self):
        return tuple(
            e for e, t in zip(self.elements, self.origin_tags) if t != GENERATOR
        )


@dataclass(frozen=True)
class ZonotopePointSet:
    points: tuple          # integer vectors
    lambda_coords: tuple   # per point, tuple of Fractions in [0, 1)


def _grid_denominators(g: ExactMatrix):
    """Per-generator denominators q_i bounding the lambda grid.

    For an integer point x of the cone, restricting to an invertible maximal
    column set J gives lambda = x^J (A^J)^{-1}, so lambda_i is a multiple of
    1/q_i with q_i the lcm of the denominators in column i of (A^J)^{-1}.
    """
    _, pivots, _ = _rref(g)
    binv = inverse(g.take_cols(pivots))
    qs = []
    for i in range(g.rows):
        q = 1
        for k in range(g.rows):
            v = Fraction(binv[k, i])
            q = lcm(q, v.denominator)
        qs.append(q)
    return qs


def zonotope_points(cone: TeCone) -> ZonotopePointSet:
    """All integer points of the half-open zonotope of the generators.

    Enumerates the lambda grid {0, 1/q_i, ..., (q_i-1)/q_i} per coordinate
    and keeps the integral combinations; the point count always equals
    gcddet of the generator matrix.
    """
    g = cone.generators
    n, d = g.rows, g.cols
    qs = _grid_denominators(g)
    big_q = lcm(*qs) if qs else 1
    scaled = [
        [x * (big_q // q) for x in row] for row, q in zip(g.entries, qs)
    ]
    points = []
    lambdas = []

    def rec(i, acc, lam):
        if i == n:
            if all(v % big_q == 0 for v in acc):
                points.append(tuple(v // big_q for v in acc))
                lambdas.append(tuple(lam))
            return
        row = scaled[i]
        cur = list(acc)
        for t in range(qs[i]):
            rec(i + 1, cur, lam + [Fraction(t, qs[i])])
            cur = [a + b for a, b in zip(cur, row)]

    rec(0, [0] * d, [])
    expected = gcddet(g)
    if len(points) != expected:
        raise AssertionError(
            f"zonotope enumeration found {len(points)} points, gcddet={expected}"
        )
    return ZonotopePointSet(tuple(points), tuple(lambdas))


def hilbert_oracle(cone: TeCone) -> HilbertBasis:
    """Brute-force Hilbert basis: generators plus the irreducible nonzero
    zonotope points.

    Testing sums only within the zonotope point set suffices: if h = u + v
    with u, v nonzero integer cone points, the lambda-coordinates of u and v
    are dominated by lambda(h) < 1 componentwise, so both are zonotope
    points.  Generators are irreducible because they are primitive.
    """
    z = zonotope_points(cone)
    nonzero = [p for p in z.points if any(p)]
    pts = set(nonzero)
    elements = [tuple(r) for r in cone.generators.entries]
    tags = [GENERATOR] * len(elements)
    for p in sorted(nonzero):
        reducible = False
        for u in nonzero:
            v = tuple(a - b for a, b in zip(p, u))
            if any(v) and v in pts and u != p:
                reducible = True
                break
        if not reducible:
            elements.append(p)
            tags.append(ORACLE)
    return HilbertBasis(tuple(elements), tuple(tags))


def is_hilbert_element(cone: TeCone, x) -> bool:
    """Membership of x in the (oracle) Hilbert basis of the cone."""
    lam = cone.lambda_coords(x)
    if lam is None or any(c < 0 for c in lam):
        raise MembershipError(f"{tuple(x)} is not in the cone")
    return tuple(x) in hilbert_oracle(cone).as_set()


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def _vec_scale_sum(rows, coeffs):
    d = len(rows[0]) if rows else 0
    out = [Fraction(0)] * d
    for row, c in zip(rows, coeffs):
        for j, x in enumerate(row):
            out[j] += c * x
    if any(v.denominator != 1 for v in out):
        raise DomainError("combination is not an integer vector")
    return tuple(int(v) for v in out)


def thick_case(m: ExactMatrix):
    """("a" | "b", parity) for a thick interlace.

    Restricted to its support columns the matrix is +-1, and the counts of
    +1 and -1 entries share one parity p across all columns; the quarter-sum
    form applies exactly when n = 2p (mod 4), the skewed forms otherwise.
    """
    supp_cols = [j for j in range(m.cols) if any(m[i, j] != 0 for i in range(m.rows))]
    parities = set()
    for j in supp_cols:
        col = [m[i, j] for i in range(m.rows)]
        ones = sum(1 for x in col if x == 1)
        negs = sum(1 for x in col if x == -1)
        if ones + negs != m.rows:
            raise DomainError("interlace support columns must be +-1")
        if ones % 2 != negs % 2:
            raise DomainError("column with mixed sign-count parity")
        parities.add(ones % 2)
    if len(parities) != 1:
        raise DomainError("columns do not share one sign-count parity")
    p = parities.pop()
    n = m.rows
    return ("a" if n % 4 == (2 * p) % 4 else "b"), p


def hilbert_basis_brick(m: ExactMatrix, btype: BrickType | None = None) -> HilbertBasis:
    """Closed-form Hilbert basis of the cone generated by one brick.

    tu-set: the generators.  te-lace: generators plus the half-sum of all.
    thin interlace: generators plus all pairwise half-sums.  thick
    interlace: pairwise half-sums plus either the quarter-sum of all
    (case a) or the n skewed quarter-sums (case b).
    """
    if btype is None:
        btype = brick_type(m)
    if btype is None:
        raise ClassificationError("input rows are not a te-brick")
    rows = [tuple(r) for r in m.entries]
    elements = list(rows)
    tags = [GENERATOR] * len(rows)
    n = len(rows)
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    if btype.tag == TU_SET:
        pass
    elif btype.tag == TE_LACE and n == 2:
        # Size-two laces are the same object as thin interlaces of size two.
        elements.append(_vec_scale_sum(rows, [half, half]))
        tags.append(PAIR_HALF_SUM)
    elif btype.tag == TE_LACE:
        elements.append(_vec_scale_sum(rows, [half] * n))
        tags.append(LACE_HALF_SUM)
    elif btype.tag == THIN_INTERLACE:
        for i, j in itertools.combinations(range(n), 2):
            elements.append(_vec_scale_sum([rows[i], rows[j]], [half, half]))
            tags.append(PAIR_HALF_SUM)
    elif btype.tag == THICK_INTERLACE:
        for i, j in itertools.combinations(range(n), 2):
            elements.append(_vec_scale_sum([rows[i], rows[j]], [half, half]))
            tags.append(PAIR_HALF_SUM)
        case, _ = thick_case(m)
        if case == "a":
            elements.append(_vec_scale_sum(rows, [quarter] * n))
            tags.append(QUARTER_SUM)
        else:
            for i in range(n):
                coeffs = [quarter] * n
                coeffs[i] = Fraction(3, 4)
                elements.append(_vec_scale_sum(rows, coeffs))
                tags.append(SKEWED_QUARTER_SUM)
    else:
        raise ClassificationError(f"unknown brick tag {btype.tag}")
    return HilbertBasis(tuple(elements), tuple(tags))


def hilbert_basis_te_cone(cone: TeCone, decomposition: Decomposition | None = None) -> HilbertBasis:
    """Union of the per-brick bases across the decomposition.

    Mutually-tu bricks are lattice orthogonal, so the union of the bases is
    the basis of the Minkowski sum; the gcddet product identity is verified
    before returning.
    """
    g = cone.generators
    d = decomposition or decompose_te_set(g)
    elements: list = []
    tags: list = []
    product = 1
    for _, idx in d.parts():
        sub = g.take_rows(idx)
        product *= gcddet(sub)
        hb = hilbert_basis_brick(sub)
        for e, t in zip(hb.elements, hb.origin_tags):
            if e not in elements:
                elements.append(e)
                tags.append(t)
    total = gcddet(g)
    if total != product:
        raise AssertionError(
            f"bricks are not lattice orthogonal: gcddet {total} != product {product}"
        )
    return HilbertBasis(tuple(elements), tuple(tags))
