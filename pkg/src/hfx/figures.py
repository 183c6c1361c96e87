"""Matplotlib rendering of audit reports for the CLI report path.

Figures accompany the TSV summary: a status matrix over all checks, a
multiplication-table sparsity heatmap, and (for graded algebras) the
per-degree dimension profile. Files are written, never shown.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATUS_COLORS = {"pass": "#4a955a", "fail": "#b4433a", "skip": "#8a8a8a"}


def _finish(fig, path):
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def fig_status_matrix(rows, path, title=""):
    """One colored row per check; ``rows`` are (kind, id, status, detail)."""
    labels = [f"{kind}:{name}" for kind, name, _, _ in rows]
    statuses = [status for _, _, status, _ in rows]
    height = max(1.6, 0.32 * len(rows) + 0.8)
    fig, ax = plt.subplots(figsize=(6.4, height))
    for i, (label, status) in enumerate(zip(labels, statuses)):
        y = len(rows) - 1 - i
        ax.barh(y, 1.0, color=STATUS_COLORS.get(status, "#555555"),
                edgecolor="white", height=0.9)
        ax.text(0.02, y, label, va="center", ha="left", fontsize=8,
                color="white")
        ax.text(0.98, y, status, va="center", ha="right", fontsize=8,
                color="white")
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.5, len(rows) - 0.5)
    ax.set_xticks([])
    ax.set_yticks([])
    for side in ("top", "right", "left", "bottom"):
        ax.spines[side].set_visible(False)
    if title:
        ax.set_title(title, fontsize=10)
    _finish(fig, path)


def fig_mul_heatmap(alg, path, title=""):
    """Number of terms in each basis product, as an n x n image."""
    n = len(alg.basis)
    grid = [[0] * n for _ in range(n)]
    for i, x in enumerate(alg.basis):
        for j, y in enumerate(alg.basis):
            prod = alg.mul.get((x, y))
            grid[i][j] = len(prod.coeffs) if prod else 0
    fig, ax = plt.subplots(figsize=(5.2, 4.6))
    im = ax.imshow(grid, cmap="viridis", interpolation="nearest")
    fig.colorbar(im, ax=ax, label="terms in product")
    if n <= 16:
        names = [str(b) for b in alg.basis]
        ax.set_xticks(range(n), names, rotation=90, fontsize=7)
        ax.set_yticks(range(n), names, fontsize=7)
    else:
        ax.set_xticks([])
        ax.set_yticks([])
    ax.set_xlabel("right factor")
    ax.set_ylabel("left factor")
    if title:
        ax.set_title(title, fontsize=10)
    _finish(fig, path)


def fig_degree_dims(alg, path, title=""):
    """Bar chart of component dimensions per degree (graded algebras)."""
    dims = {}
    for b in alg.basis:
        d = alg.degree[b]
        dims[d] = dims.get(d, 0) + 1
    degrees = sorted(dims)
    fig, ax = plt.subplots(figsize=(4.8, 3.2))
    ax.bar(degrees, [dims[d] for d in degrees], color="#43688f")
    ax.set_xticks(degrees)
    ax.set_xlabel("degree")
    ax.set_ylabel("component dimension")
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    if title:
        ax.set_title(title, fontsize=10)
    _finish(fig, path)


def save_report_figures(outdir, alg, rows, title="") -> list:
    """Write all applicable figures into ``outdir``; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    path = outdir / "checks.png"
    fig_status_matrix(rows, path, title=title)
    written.append(path)
    path = outdir / "mul_table.png"
    fig_mul_heatmap(alg, path, title=title)
    written.append(path)
    if alg.degree is not None:
        path = outdir / "degree_dims.png"
        fig_degree_dims(alg, path, title=title)
        written.append(path)
    return written
