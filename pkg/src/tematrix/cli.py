"""Command-line interface.

Subcommands: check-tu, check-te, classify, decompose, hilbert, oracle,
triangulate, verify, hunt, report.  Exit code 0 means the verdict was true
(or the command succeeded), 1 means a false verdict with a witness, 2 a
usage or parse error.  Certificates go to stdout (or --out FILE); timing is
a separate stderr line so output stays byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import certificates as cert
from .classify import (
    brick_type,
    find_te_violation,
    find_tu_violation,
)
from .decompose import decompose_te_set, eqdet_from_decomposition
from .errors import (
    DecompositionError,
    MatrixFileError,
    TematrixError,
)
from .hilbert import TeCone, hilbert_basis_te_cone, hilbert_oracle
from .hunt import enumerate_thick_interlaces
from .matfile import read_matrix
from .triangulate import triangulate_te_cone, verify_triangulation


def _default_jobs():
    try:
        return max(1, int(os.environ.get("TEQ_JOBS", "1")))
    except ValueError:
        return 1


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _one_indexed(indices):
    return [i + 1 for i in indices]


def cmd_check_tu(args) -> int:
    m = read_matrix(args.matrix)
    witness = find_tu_violation(m)
    if witness is None:
        print("totally unimodular: true")
        return 0
    rows, cols = witness
    print("totally unimodular: false")
    print(f"witness submatrix rows={_one_indexed(rows)} cols={_one_indexed(cols)}")
    return 1


def cmd_check_te(args) -> int:
    m = read_matrix(args.matrix)
    witness = find_te_violation(m)
    if witness is None:
        print("totally equimodular: true")
        return 0
    print("totally equimodular: false")
    print(f"witness row subset: {_one_indexed(witness)}")
    return 1


def cmd_classify(args) -> int:
    m = read_matrix(args.matrix)
    bt = brick_type(m)
    if bt is None:
        print("not a brick")
        return 1
    print(f"{bt.tag} size={bt.size} equideterminant={bt.equideterminant}")
    return 0


def cmd_decompose(args) -> int:
    m = read_matrix(args.matrix)
    try:
        d = decompose_te_set(m)
    except DecompositionError as exc:
        payload = cert.certificate(
            "decompose",
            cert.encode_matrix(m),
            {"error": str(exc), "witness": _one_indexed(exc.witness or ())},
        )
        _emit(cert.dumps(payload), args.out)
        return 1
    result = cert.decomposition_result(d)
    result["equideterminant"] = eqdet_from_decomposition(d)
    payload = cert.certificate("decompose", cert.encode_matrix(m), result)
    _emit(cert.dumps(payload), args.out)
    return 0


def _hilbert_common(args, use_oracle: bool) -> int:
    m = read_matrix(args.matrix)
    cone = TeCone(m)
    hb = hilbert_oracle(cone) if use_oracle else hilbert_basis_te_cone(cone)
    payload = cert.certificate(
        "oracle" if use_oracle else "hilbert",
        cert.encode_matrix(m),
        cert.hilbert_result(hb),
    )
    _emit(cert.dumps(payload), args.out)
    return 0


def cmd_hilbert(args) -> int:
    return _hilbert_common(args, use_oracle=False)


def cmd_oracle(args) -> int:
    return _hilbert_common(args, use_oracle=True)


def cmd_triangulate(args) -> int:
    m = read_matrix(args.matrix)
    cone = TeCone(m)
    tri = triangulate_te_cone(cone)
    report = verify_triangulation(cone, tri, jobs=args.jobs)
    payload = cert.certificate(
        "triangulate",
        cert.encode_matrix(m),
        cert.triangulation_result(tri, checks=report.as_dict()),
    )
    _emit(cert.dumps(payload), args.out)
    return 0 if report.all_passed else 1


def cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        data = json.load(fh)
    m = cert.decode_matrix(data["input"])
    tri = cert.decode_triangulation(data["result"])
    cone = TeCone(m)
    report = verify_triangulation(cone, tri, jobs=args.jobs)
    for name, ok in report.as_dict().items():
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    return 0 if report.all_passed else 1


def cmd_hunt(args) -> int:
    report = enumerate_thick_interlaces(
        args.size,
        jobs=args.jobs,
        checkpoint=args.resume or args.checkpoint,
        resume=args.resume is not None,
    )
    payload = cert.certificate("hunt", {"size": args.size}, report.as_dict())
    _emit(cert.dumps(payload), args.out)
    return 0


def cmd_report(args) -> int:
    from .report import write_report

    m = read_matrix(args.matrix)
    written = write_report(m, args.out_dir, what=args.what, jobs=args.jobs)
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tematrix",
        description=(
            "Exact toolkit for totally equimodular matrices: recognition, "
            "brick decomposition, Hilbert bases, regular unimodular Hilbert "
            "triangulations, and the thick-interlace search"
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, matrix=True, out=False, jobs=False):
        sp = sub.add_parser(name, help=help_text)
        if matrix:
            sp.add_argument("matrix", help="matrix file (rows of integers or p/q)")
        if out:
            sp.add_argument("--out", help="write the JSON certificate here")
        if jobs:
            sp.add_argument(
                "--jobs",
                type=int,
                default=_default_jobs(),
                help="parallel workers (default: TEQ_JOBS or 1)",
            )
        sp.set_defaults(fn=fn)
        return sp

    add("check-tu", cmd_check_tu, "test total unimodularity, print a witness")
    add("check-te", cmd_check_te, "test total equimodularity, print a witness")
    add("classify", cmd_classify, "brick-type an independent 0,+-1 row set")
    add("decompose", cmd_decompose, "decompose a te-set into bricks", out=True)
    add("hilbert", cmd_hilbert, "Hilbert basis via the closed forms", out=True)
    add("oracle", cmd_oracle, "Hilbert basis via zonotope brute force", out=True)
    add(
        "triangulate",
        cmd_triangulate,
        "construct and verify a regular unimodular Hilbert triangulation",
        out=True,
        jobs=True,
    )
    sp = sub.add_parser("verify", help="re-run all checks on a triangulation JSON")
    sp.add_argument("certificate", help="certificate emitted by triangulate")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.set_defaults(fn=cmd_verify)
    sp = sub.add_parser("hunt", help="enumerate thick te-interlaces of a size")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--resume", help="checkpoint file to resume from (and extend)")
    sp.add_argument("--checkpoint", help="checkpoint file to write")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.add_argument("--out", help="write the JSON report here")
    sp.set_defaults(fn=cmd_hunt)
    sp = add(
        "report",
        cmd_report,
        "render figures and delimited summaries for a matrix",
        jobs=True,
    )
    sp.add_argument("--out-dir", required=True, help="directory for figures and CSV")
    sp.add_argument(
        "--what",
        choices=("triangulate", "decompose"),
        default="triangulate",
    )
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    t0 = time.monotonic()
    try:
        code = args.fn(args)
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TematrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        print(f"elapsed: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
