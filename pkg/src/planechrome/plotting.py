"""Matplotlib renderings of graphs and run statistics.

Coordinates are converted to floats for drawing only.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

PALETTE = {0: "#bbbbbb", 1: "#d62728", 2: "#1f77b4", 3: "#2ca02c", 4: "#ffbf00"}


def _figure(width=6.0, height=6.0):
    fig, ax = plt.subplots(figsize=(width, height))
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def draw_graph(g, ax=None, colors: Mapping[int, int] | None = None, aux: bool = True,
               highlight: Sequence[int] = ()):
    if ax is None:
        _, ax = _figure()
    xy = [p.to_float() for p in g.points]
    if aux and g.aux_edges:
        ax.add_collection(LineCollection([(xy[i], xy[j]) for i, j in g.aux_edges],
                                         colors="#f4a6c6", linewidths=0.6, zorder=1))
    ax.add_collection(LineCollection([(xy[i], xy[j]) for i, j in g.unit_edges],
                                     colors="#3b6fd8", linewidths=0.5, zorder=2))
    fill = [PALETTE[colors.get(i, 0)] if colors else "#ffe680" for i in range(g.n)]
    if xy:
        xs, ys = zip(*xy)
        ax.scatter(xs, ys, s=12, c=fill, edgecolors="black", linewidths=0.3, zorder=3)
    for i in highlight:
        ax.scatter([xy[i][0]], [xy[i][1]], s=40, c="red", zorder=4)
    ax.autoscale_view()
    if g.name:
        ax.set_title(f"{g.name}: {g.n} vertices, {len(g.unit_edges)} unit edges", fontsize=9)
    return ax


def graph_svg(g) -> bytes:
    fig, ax = _figure()
    draw_graph(g, ax, highlight=sorted(g.specials.values()))
    buf = io.BytesIO()
    fig.savefig(buf, format="svg", bbox_inches="tight")
    plt.close(fig)
    return buf.getvalue()


def save_graph_figure(g, path: Path, colors: Mapping[int, int] | None = None) -> Path:
    fig, ax = _figure()
    draw_graph(g, ax, colors=colors, highlight=sorted(g.specials.values()))
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def save_histogram(counts: Mapping[int, int], path: Path, xlabel: str, title: str = "") -> Path:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    keys = sorted(counts)
    ax.bar(keys, [counts[k] for k in keys], color="#3b6fd8")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("colorings")
    if title:
        ax.set_title(title, fontsize=9)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path
