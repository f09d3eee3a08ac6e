"""Figures written to files (Agg backend): a graph with its Gallai vertices and
a longest path highlighted, and per-order bars for a scan."""

from __future__ import annotations

from collections import Counter
from pathlib import Path as FsPath
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .graph import Graph  # noqa: E402


def circular_layout(n: int) -> np.ndarray:
    ang = np.pi / 2 - 2 * np.pi * np.arange(n) / max(n, 1)
    return np.column_stack([np.cos(ang), np.sin(ang)])


def draw_graph(g: Graph, out, path: Sequence[int] | None = None, gallai: Sequence[int] = (),
               pos: np.ndarray | None = None, title: str | None = None) -> FsPath:
    """Save a drawing of ``g``; path edges are thick, Gallai vertices filled red."""
    pos = circular_layout(g.n) if pos is None else pos
    on_path = set()
    if path:
        on_path = {frozenset(e) for e in zip(path, path[1:])}
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.edges():
        hot = frozenset((u, v)) in on_path
        ax.plot(*pos[[u, v]].T, color="tab:blue" if hot else "0.7", lw=3 if hot else 1, zorder=1)
    gset = set(gallai)
    colors = ["tab:red" if v in gset else "white" for v in range(g.n)]
    ax.scatter(pos[:, 0], pos[:, 1], s=220, c=colors, edgecolors="k", zorder=2)
    for v in range(g.n):
        ax.annotate(str(v), pos[v], ha="center", va="center", fontsize=8, zorder=3)
    ax.set_title(title or (g.label or f"n={g.n}"))
    ax.set_aspect("equal")
    ax.axis("off")
    out = FsPath(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return out


def plot_scan(report, out) -> FsPath:
    """Bars per vertex count: graphs scanned, hypothesis hits, violations."""
    tag = report.theorem
    total = Counter(r["n"] for r in report.records)
    hits = Counter(r["n"] for r in report.records if tag in r["verdicts"])
    bad = Counter(r["n"] for r in report.records if r["verdicts"].get(tag) is False)
    ns = sorted(total)
    x = np.arange(len(ns))
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(x - 0.25, [total[n] for n in ns], 0.25, label="scanned")
    ax.bar(x, [hits[n] for n in ns], 0.25, label="hypothesis holds")
    ax.bar(x + 0.25, [bad[n] for n in ns], 0.25, label="violations", color="tab:red")
    ax.set_xticks(x, [str(n) for n in ns])
    ax.set_xlabel("vertices")
    ax.set_yscale("symlog")
    ax.set_title(f"{tag} on {report.source}")
    ax.legend(fontsize=8)
    out = FsPath(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return out
