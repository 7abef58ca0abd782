"""Exact-arithmetic toolkit for totally equimodular matrices."""

from .core import ExactMatrix, det, gcddet, inverse, rank
from .classify import (
    BrickType,
    brick_type,
    eqdet,
    is_equimodular,
    is_min_non_tu,
    is_totally_equimodular,
    is_totally_unimodular,
    is_unimodular_set,
)
from .decompose import Decomposition, decompose_te_set, find_te_laces
from .hilbert import HilbertBasis, TeCone, hilbert_basis_te_cone, hilbert_oracle
from .triangulate import Triangulation, triangulate_te_cone, verify_triangulation
from .hunt import SearchReport, canonical_form, enumerate_thick_interlaces

__all__ = [
    "BrickType",
    "Decomposition",
    "ExactMatrix",
    "HilbertBasis",
    "SearchReport",
    "TeCone",
    "Triangulation",
    "brick_type",
    "canonical_form",
    "decompose_te_set",
    "det",
    "enumerate_thick_interlaces",
    "eqdet",
    "find_te_laces",
    "gcddet",
    "hilbert_basis_te_cone",
    "hilbert_oracle",
    "inverse",
    "is_equimodular",
    "is_min_non_tu",
    "is_totally_equimodular",
    "is_totally_unimodular",
    "is_unimodular_set",
    "rank",
    "triangulate_te_cone",
    "verify_triangulation",
]
