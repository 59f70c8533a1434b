"""Figures and delimited tables for a constructed level sequence.

Writes, into one directory:

    counts.csv   level, nodes, hasse_edges, comparable_pairs, longest_path
    census.csv   level, distance, count
    growth.png   node/edge growth across levels
    census.png   census histograms per level
    level_N.png  layered drawing of each level small enough to read
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .construction import LevelSequence
from .graphs import SubtypingGraph, longest_path, node_depths
from .types import expressible, render

MAX_DRAWN_NODES = 64


def write_report(seq: LevelSequence, outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [
        _write_counts_csv(seq, outdir / "counts.csv"),
        _write_census_csv(seq, outdir / "census.csv"),
        _plot_growth(seq, outdir / "growth.png"),
        _plot_census(seq, outdir / "census.png"),
    ]
    for g in seq.levels:
        if len(g.nodes) <= MAX_DRAWN_NODES:
            written.append(_draw_level(g, outdir / f"level_{g.level}.png"))
    return written


def _write_counts_csv(seq: LevelSequence, path: Path) -> Path:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["level", "nodes", "hasse_edges", "comparable_pairs", "longest_path"])
        for g in seq.levels:
            census = seq.census(g.level)
            writer.writerow([g.level, len(g.nodes), g.edge_count(), census.total,
                             longest_path(g)])
    return path


def _write_census_csv(seq: LevelSequence, path: Path) -> Path:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["level", "distance", "count"])
        for g in seq.levels:
            for d, count in enumerate(seq.census(g.level).counts):
                writer.writerow([g.level, d, count])
    return path


def _plot_growth(seq: LevelSequence, path: Path) -> Path:
    levels = [g.level for g in seq.levels]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(levels, seq.node_counts(), "o-", label="nodes")
    ax.plot(levels, seq.edge_counts(), "s-", label="cover edges")
    ax.plot(levels, [seq.census(i).total for i in levels], "^-", label="comparable pairs")
    if max(seq.node_counts()) > 50:
        ax.set_yscale("log")
    ax.set_xticks(levels)
    ax.set_xlabel("level")
    ax.set_title(f"growth per level ({seq.mode})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _plot_census(seq: LevelSequence, path: Path) -> Path:
    fig, axes = plt.subplots(1, len(seq.levels), figsize=(3 * len(seq.levels), 3),
                             squeeze=False)
    for ax, g in zip(axes[0], seq.levels):
        counts = seq.census(g.level).counts
        ax.bar(range(len(counts)), counts)
        ax.set_title(f"level {g.level}")
        ax.set_xlabel("longest-path distance")
    axes[0][0].set_ylabel("comparable pairs")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _draw_level(g: SubtypingGraph, path: Path) -> Path:
    """Layered top-down drawing; dotted boxes for inexpressible types."""
    table = g.table
    depths = node_depths(g)
    layers: dict[int, list[int]] = {}
    for i, depth in enumerate(depths):
        layers.setdefault(depth, []).append(i)
    xy = {}
    for depth, members in layers.items():
        for k, i in enumerate(members):  # members are in canonical node order
            xy[i] = (k - (len(members) - 1) / 2, -depth)
    width = max(len(m) for m in layers.values())
    fig, ax = plt.subplots(figsize=(max(4.0, 1.9 * width), max(3.0, 0.9 * len(layers))))
    for sup, sub in g.hasse_edges():
        (x1, y1), (x2, y2) = xy[sup], xy[sub]
        dotted = not (expressible(table, g.nodes[sup]) and expressible(table, g.nodes[sub]))
        ax.plot([x1, x2], [y1, y2], linestyle=":" if dotted else "-",
                color="gray", linewidth=1, zorder=1)
    for i, term in enumerate(g.nodes):
        x, y = xy[i]
        dotted = not expressible(table, term)
        ax.text(x, y, render(table, term), ha="center", va="center", fontsize=8, zorder=2,
                bbox={"boxstyle": "round", "facecolor": "white",
                      "linestyle": ":" if dotted else "-"})
    ax.set_axis_off()
    ax.set_title(f"level {g.level} ({len(g.nodes)} nodes, {g.edge_count()} edges)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


__all__ = ["write_report", "MAX_DRAWN_NODES"]
