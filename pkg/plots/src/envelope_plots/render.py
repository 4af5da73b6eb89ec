"""Renderers: one figure class per pipeline CSV.

Rendering is read-only over the CSVs and never recomputes metrics; deleting
the images and re-rendering is idempotent. Empty-but-valid files produce an
image with a "no data" annotation rather than an error.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .schemas import FigureJob, read_table


def render(job: FigureJob) -> Path:
    """Render one figure job to its output path; returns the path written."""
    header, rows = read_table(job)
    out = Path(job.output_image_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig = _RENDERERS[job.figure_kind](header, rows, job.style)
    fig.savefig(out, dpi=job.style.get("dpi", 120))
    plt.close(fig)
    return out


def _no_data(ax):
    ax.annotate(
        "no data",
        xy=(0.5, 0.5),
        xycoords="axes fraction",
        ha="center",
        va="center",
        fontsize=14,
        color="gray",
    )


def _render_dist_indices(header, rows, style):
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.2))
    titles = ("delta", "Delta", "condition number")
    if not rows:
        for ax, t in zip(axes, titles):
            ax.set_title(t)
            _no_data(ax)
        fig.tight_layout()
        return fig
    delta = np.array([float(r[1]) for r in rows])
    big = np.array([float(r[2]) for r in rows])
    cond = np.array([float(r[3]) for r in rows])
    bins = style.get("bins", 40)
    for ax, data, title in zip(axes, (delta, big, cond), titles):
        if title == "condition number":
            data = np.log10(data)
            ax.set_xlabel("log10(cond)")
        ax.hist(data, bins=bins, color="#4878a8", edgecolor="white")
        ax.set_title(title)
    fig.suptitle(style.get("title", "index and condition-number distributions"))
    fig.tight_layout()
    return fig


def _render_dist_tau(header, rows, style):
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.set_title(style.get("title", "Kendall tau distribution"))
    ax.set_xlabel("tau")
    if not rows:
        _no_data(ax)
        return fig
    taus = np.array([float(r[1]) for r in rows])
    ax.hist(taus, bins=style.get("bins", 50), color="#4878a8", edgecolor="white")
    fig.tight_layout()
    return fig


def _render_pagerank_compare(header, rows, style):
    return _per_node_lines(header, rows, style, ylabel="PageRank",
                           default_title="PageRank comparison")


def _render_clustering(header, rows, style):
    return _per_node_lines(header, rows, style, ylabel="local clustering",
                           default_title="local clustering coefficients")


def _per_node_lines(header, rows, style, ylabel, default_title):
    fig, ax = plt.subplots(figsize=(8, 3.6))
    ax.set_title(style.get("title", default_title))
    ax.set_xlabel("node")
    ax.set_ylabel(ylabel)
    if not rows:
        _no_data(ax)
        return fig
    nodes = [int(r[0]) for r in rows]
    for col in range(1, len(header)):
        values = [float(r[col]) for r in rows]
        marker = "o" if header[col] == "base" else "."
        width = 2.0 if header[col] == "base" else 1.0
        ax.plot(nodes, values, marker=marker, linewidth=width, label=header[col])
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    return fig


def _grouped_bars(header, rows, style, default_title):
    fig, ax = plt.subplots(figsize=(8, 3.6))
    ax.set_title(style.get("title", default_title))
    if not rows:
        _no_data(ax)
        return fig
    labels = [r[0] for r in rows]
    series = header[1:]
    x = np.arange(len(labels))
    width = 0.8 / len(series)
    for k, name in enumerate(series):
        vals = [float(r[k + 1]) for r in rows]
        ax.bar(x + k * width, vals, width, label=name)
    ax.set_xticks(x + width * (len(series) - 1) / 2)
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=7)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def _render_motif(header, rows, style):
    return _grouped_bars(header, rows, style, "motif densities")


def _render_coreperiph(header, rows, style):
    return _grouped_bars(header, rows, style, "core and periphery node counts")


def _render_stability(header, rows, style):
    fig, ax = plt.subplots(figsize=(8, 3.6))
    ax.set_title(style.get("title", "GFT stability norms"))
    if not rows:
        _no_data(ax)
        return fig
    labels = [r[0] for r in rows]
    left = [float(r[1]) for r in rows]
    right = [float(r[2]) for r in rows]
    x = np.arange(len(labels))
    ax.bar(x - 0.2, left, 0.4, label="|F·F⁻¹ − I|")
    ax.bar(x + 0.2, right, 0.4, label="|F⁻¹·F − I|")
    ax.set_yscale("log")
    ax.set_xticks(x)
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=7)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def _render_basis_diff(header, rows, style):
    fig, ax = plt.subplots(figsize=(5, 4.2))
    ax.set_title(style.get("title", "eigenvector column magnitude differences"))
    if not rows:
        _no_data(ax)
        return fig
    ri = [int(r[0]) for r in rows]
    ci = [int(r[1]) for r in rows]
    n = max(ri) + 1
    m = max(ci) + 1
    table = np.zeros((n, m))
    for r in rows:
        table[int(r[0]), int(r[1])] = float(r[2])
    im = ax.imshow(table, cmap=style.get("cmap", "viridis"), origin="upper")
    fig.colorbar(im, ax=ax, shrink=0.85)
    ax.set_xlabel("column of second basis")
    ax.set_ylabel("column of first basis")
    fig.tight_layout()
    return fig


def _render_system_signals(header, rows, style):
    fig, (ax_re, ax_im) = plt.subplots(2, 1, figsize=(8, 5.4), sharex=True)
    ax_re.set_title(style.get("title", "system impulse signals"))
    ax_re.set_ylabel("real part")
    ax_im.set_ylabel("imaginary part")
    ax_im.set_xlabel("node")
    if not rows:
        _no_data(ax_re)
        _no_data(ax_im)
        return fig
    nodes = [int(r[0]) for r in rows]
    for col in range(1, len(header), 2):
        name = header[col][:-3]
        re_vals = [float(r[col]) for r in rows]
        im_vals = [float(r[col + 1]) for r in rows]
        ax_re.plot(nodes, re_vals, marker=".", label=name)
        ax_im.plot(nodes, im_vals, marker=".", label=name)
    ax_re.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    return fig


_RENDERERS = {
    "dist_indices": _render_dist_indices,
    "dist_tau": _render_dist_tau,
    "pagerank_compare": _render_pagerank_compare,
    "clustering": _render_clustering,
    "motif": _render_motif,
    "coreperiph": _render_coreperiph,
    "stability": _render_stability,
    "basis_diff": _render_basis_diff,
    "system_signals": _render_system_signals,
}
