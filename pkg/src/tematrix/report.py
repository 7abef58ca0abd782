"""Report rendering: matplotlib figures plus delimited summaries.

Triangulation cells are drawn in the paper-of-record style for this domain:
the cone generators sit on a circle, a loop at vertex i stands for the
generator itself, an edge ij for the half-sum of generators i and j, a
filled center dot for the quarter-sum of all, and a ring around vertex i
for the skewed quarter-sum weighted toward i.
"""

from __future__ import annotations

import csv
import math
import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import certificates as cert
from .core import ExactMatrix, det, gcddet
from .decompose import decompose_te_set, eqdet_from_decomposition
from .errors import TematrixError
from .hilbert import TeCone
from .triangulate import triangulate_te_cone, verify_triangulation


def _point_glyph(lam):
    """Classify a cell vertex by its generator coordinates."""
    n = len(lam)
    support = [i for i, c in enumerate(lam) if c != 0]
    if len(support) == 1 and lam[support[0]] == 1:
        return ("loop", support[0])
    if len(support) == 2 and all(lam[i] == Fraction(1, 2) for i in support):
        return ("edge", tuple(support))
    if all(c == Fraction(1, 4) for c in lam):
        return ("center", None)
    big = [i for i in support if lam[i] == Fraction(3, 4)]
    if len(big) == 1 and all(
        lam[i] == Fraction(1, 4) for i in range(n) if i != big[0]
    ):
        return ("ring", big[0])
    return ("other", tuple(support))


def _draw_cell(ax, n, glyphs):
    angles = [math.pi / 2 - 2 * math.pi * i / n for i in range(n)]
    xs = [math.cos(a) for a in angles]
    ys = [math.sin(a) for a in angles]
    ax.plot(
        xs + [xs[0]], ys + [ys[0]], color="0.85", linewidth=0.8, zorder=1
    )
    for i in range(n):
        ax.text(
            1.32 * xs[i], 1.32 * ys[i], str(i + 1),
            ha="center", va="center", fontsize=7, color="0.4",
        )
    for kind, data in glyphs:
        if kind == "loop":
            i = data
            ax.add_patch(
                plt.Circle(
                    (1.15 * xs[i], 1.15 * ys[i]), 0.12,
                    fill=False, color="tab:blue", linewidth=1.4, zorder=3,
                )
            )
        elif kind == "edge":
            i, j = data
            ax.plot(
                [xs[i], xs[j]], [ys[i], ys[j]],
                color="tab:blue", linewidth=1.4, zorder=2,
            )
        elif kind == "center":
            ax.plot([0], [0], "o", color="tab:green", markersize=6, zorder=3)
        elif kind == "ring":
            i = data
            ax.add_patch(
                plt.Circle(
                    (xs[i], ys[i]), 0.18,
                    fill=False, color="tab:red", linewidth=1.6, zorder=3,
                )
            )
        else:
            for i in data:
                ax.plot([xs[i]], [ys[i]], "s", color="tab:purple", zorder=3)
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    ax.set_aspect("equal")
    ax.axis("off")


def render_triangulation_figure(cone: TeCone, tri, path):
    n = cone.dim
    lam = [cone.lambda_coords(p) for p in tri.points]
    ncells = len(tri.cells)
    cols = min(8, max(1, ncells))
    rows = (ncells + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(1.6 * cols, 1.7 * rows))
    axes = [axes] if ncells == 1 and rows * cols == 1 else list(
        axes.flat if hasattr(axes, "flat") else axes
    )
    for ax in axes[ncells:]:
        ax.axis("off")
    for idx, cell in enumerate(tri.cells):
        glyphs = [_point_glyph(lam[i]) for i in cell]
        _draw_cell(axes[idx], n, glyphs)
        axes[idx].set_title(f"cell {idx + 1}", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_decomposition_figure(m: ExactMatrix, d, path):
    order = []
    labels = []
    for tag, idx in d.parts():
        for i in idx:
            order.append(i)
            labels.append(tag)
    fig, ax = plt.subplots(figsize=(0.5 * m.cols + 2, 0.4 * m.rows + 1.5))
    colors = {1: "#1f77b4", -1: "#d62728", 0: "white"}
    for r, i in enumerate(order):
        for j in range(m.cols):
            v = m[i, j]
            ax.add_patch(
                plt.Rectangle(
                    (j, -r), 1, -1,
                    facecolor=colors.get(v, "#9467bd"),
                    edgecolor="0.8",
                )
            )
            if v != 0:
                ax.text(
                    j + 0.5, -r - 0.5, str(v),
                    ha="center", va="center", fontsize=7, color="white",
                )
        ax.text(-0.3, -r - 0.5, f"r{i + 1}", ha="right", va="center", fontsize=7)
        ax.text(
            m.cols + 0.3, -r - 0.5, labels[r],
            ha="left", va="center", fontsize=7,
        )
    boundaries = set()
    acc = 0
    for _, idx in d.parts():
        acc += len(idx)
        boundaries.add(acc)
    for b in boundaries:
        ax.plot([0, m.cols], [-b, -b], color="black", linewidth=1.2)
    ax.set_xlim(-1.5, m.cols + 3)
    ax.set_ylim(-m.rows - 0.5, 0.5)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(m: ExactMatrix, out_dir, what="triangulate", jobs=1):
    """Compute the requested artifact and write figures next to CSV and JSON
    summaries; returns the list of written paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    if what == "decompose":
        d = decompose_te_set(m)
        csv_path = os.path.join(out_dir, "decomposition.csv")
        with open(csv_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["row", "brick_type", "brick_members"])
            for i in range(m.rows):
                tag, idx = d.brick_of_row(i)
                w.writerow([i + 1, tag, " ".join(str(t + 1) for t in idx)])
            w.writerow([])
            w.writerow(["equideterminant", eqdet_from_decomposition(d), ""])
        written.append(csv_path)
        fig_path = os.path.join(out_dir, "decomposition.png")
        render_decomposition_figure(m, d, fig_path)
        written.append(fig_path)
        json_path = os.path.join(out_dir, "decomposition.json")
        payload = cert.certificate(
            "decompose", cert.encode_matrix(m), cert.decomposition_result(d)
        )
        with open(json_path, "w") as fh:
            fh.write(cert.dumps(payload))
        written.append(json_path)
        return written
    if what != "triangulate":
        raise TematrixError(f"unknown report kind {what!r}")
    cone = TeCone(m)
    tri = triangulate_te_cone(cone)
    report = verify_triangulation(cone, tri, jobs=jobs)
    lam = [cone.lambda_coords(p) for p in tri.points]
    csv_path = os.path.join(out_dir, "cells.csv")
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            ["cell", "point_indices", "gcddet", "normalized_volume", "points"]
        )
        for idx, cell in enumerate(tri.cells):
            mat = ExactMatrix(tri.cell_rows(cell))
            vol = abs(Fraction(det(ExactMatrix([lam[i] for i in cell]))))
            denom = Fraction(1)
            for i in cell:
                denom *= sum(lam[i], Fraction(0))
            w.writerow(
                [
                    idx + 1,
                    " ".join(str(i + 1) for i in cell),
                    gcddet(mat),
                    str(vol / denom),
                    "; ".join(str(tuple(int(x) for x in tri.points[i])) for i in cell),
                ]
            )
    written.append(csv_path)
    fig_path = os.path.join(out_dir, "cells.png")
    render_triangulation_figure(cone, tri, fig_path)
    written.append(fig_path)
    json_path = os.path.join(out_dir, "triangulation.json")
    payload = cert.certificate(
        "triangulate",
        cert.encode_matrix(m),
        cert.triangulation_result(tri, checks=report.as_dict()),
    )
    with open(json_path, "w") as fh:
        fh.write(cert.dumps(payload))
    written.append(json_path)
    return written
