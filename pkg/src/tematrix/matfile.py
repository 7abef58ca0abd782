"""Plain-text matrix files: one row per line, whitespace-separated entries,
each an integer ``p`` or a fraction ``p/q``; ``#`` starts a comment line and
blank lines are ignored.  Parsing is locale-independent and round-trips
exactly."""

from __future__ import annotations

import re
from fractions import Fraction

from .core import ExactMatrix
from .errors import MatrixFileError

_ENTRY = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_matrix_text(text: str, name: str = "<string>") -> ExactMatrix:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        row = []
        for colno, token in enumerate(line.split(), start=1):
            if not _ENTRY.match(token):
                raise MatrixFileError(
                    f"{name}:{lineno}:{colno}: bad entry {token!r} "
                    "(expected integer or p/q)",
                    line=lineno,
                    column=colno,
                )
            if "/" in token:
                num, den = token.split("/")
                if int(den) == 0:
                    raise MatrixFileError(
                        f"{name}:{lineno}:{colno}: zero denominator",
                        line=lineno,
                        column=colno,
                    )
                row.append(Fraction(int(num), int(den)))
            else:
                row.append(int(token))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixFileError(
                f"{name}:{lineno}: row has {len(row)} entries, expected {width}",
                line=lineno,
                column=1,
            )
        rows.append(row)
    if not rows:
        raise MatrixFileError(f"{name}: no matrix rows found", line=1, column=1)
    return ExactMatrix(rows)


def read_matrix(path) -> ExactMatrix:
    try:
        with open(path) as fh:
            return parse_matrix_text(fh.read(), name=str(path))
    except OSError as exc:
        raise MatrixFileError(f"{path}: {exc.strerror}") from exc


def format_entry(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_matrix(m: ExactMatrix) -> str:
    widths = [
        max(len(format_entry(m[i, j])) for i in range(m.rows))
        for j in range(m.cols)
    ]
    lines = []
    for i in range(m.rows):
        lines.append(
            " ".join(format_entry(m[i, j]).rjust(widths[j]) for j in range(m.cols))
        )
    return "\n".join(lines) + "\n"


def write_matrix(path, m: ExactMatrix):
    with open(path, "w") as fh:
        fh.write(format_matrix(m))
