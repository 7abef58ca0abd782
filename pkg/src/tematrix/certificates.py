"""JSON certificate schemas shared by the CLI and the verifier.

Certificates are deterministic: keys are sorted, rationals are emitted as
exact "p/q" strings (integers as JSON ints), and no timestamps appear in
the body, so identical input yields byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import ExactMatrix
from .decompose import Decomposition
from .errors import MatrixFileError
from .hilbert import HilbertBasis
from .matfile import format_entry

VERSION = "1"


def encode_scalar(x):
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return format_entry(f)


def decode_scalar(v):
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        if "/" in v:
            num, den = v.split("/")
            return Fraction(int(num), int(den))
        return int(v)
    raise MatrixFileError(f"bad scalar {v!r} in certificate")


def encode_matrix(m: ExactMatrix):
    return [[encode_scalar(x) for x in row] for row in m.entries]


def decode_matrix(rows) -> ExactMatrix:
    return ExactMatrix([[decode_scalar(x) for x in row] for row in rows])


def certificate(command: str, input_data, result, certificates=None) -> dict:
    return {
        "command": command,
        "input": input_data,
        "result": result,
        "certificates": certificates if certificates is not None else {},
        "version": VERSION,
    }


def dumps(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, indent=2) + "\n"


def decomposition_result(d: Decomposition) -> dict:
    return {
        "tuSet": [i + 1 for i in d.tu_set],
        "laces": [[i + 1 for i in l] for l in d.laces],
        "thinInterlaces": [[i + 1 for i in s] for s in d.thin],
        "thickInterlaces": [[i + 1 for i in t] for t in d.thick],
        "minimalNonTuSubsets": [[i + 1 for i in s] for s in d.minimal_non_tu],
    }


def hilbert_result(hb: HilbertBasis) -> dict:
    return {
        "elements": [
            {"vector": [int(x) for x in e], "origin": t}
            for e, t in zip(hb.elements, hb.origin_tags)
        ]
    }


def triangulation_result(tri, checks=None) -> dict:
    out = {
        "points": [[int(x) for x in p] for p in tri.points],
        "cells": [[int(i) for i in c] for c in tri.cells],
        "lifting": None
        if tri.lifting is None
        else [encode_scalar(w) for w in tri.lifting],
    }
    if checks is not None:
        out["checks"] = checks
    return out


def decode_triangulation(data):
    from .triangulate import Triangulation

    points = tuple(tuple(int(x) for x in p) for p in data["points"])
    cells = tuple(tuple(int(i) for i in c) for c in data["cells"])
    lifting = data.get("lifting")
    if lifting is not None:
        lifting = tuple(Fraction(decode_scalar(w)) for w in lifting)
    return Triangulation(points, cells, lifting)
