"""
Figures and tab-separated tables written next to the JSON output.

Figures use the non-interactive Agg backend so they render without a display.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .checks import CheckResult
from .tableaux import ColouredYoungGraph, YoungDiagram

__all__ = ["plot_young_graph", "plot_check_timings", "write_check_tsv", "write_report"]

TSV_FIELDS = ("name", "passed", "seconds", "failures", "relation")


def _label(lam: YoungDiagram) -> str:
    return ",".join(map(str, lam.rows)) if lam.rows else "∅"


def _math(content: int) -> str:
    """``edge_label`` as matplotlib mathtext."""
    return "$1$" if content == 0 else f"$q^{{{2 * content}}}$"


def plot_young_graph(graph: ColouredYoungGraph, path) -> Path:
    """Diagrams by level, edges coloured and labelled by the eigenvalue ``q^(2c)``."""
    pos = {}
    for k, level in enumerate(graph.levels):
        for i, lam in enumerate(level):
            pos[lam] = (i - (len(level) - 1) / 2, -k)
    contents = sorted(graph.colours())
    cmap = plt.get_cmap("coolwarm", max(len(contents), 2))
    colour = {c: cmap(i) for i, c in enumerate(contents)}

    width = max(4.0, 1.6 * max(len(level) for level in graph.levels))
    fig, ax = plt.subplots(figsize=(width, 1.4 * (graph.n + 1)))
    for a, b, c in graph.edges:
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.plot([x0, x1], [y0, y1], color=colour[c], lw=1.5, zorder=1)
        ax.text((x0 + x1) / 2, (y0 + y1) / 2, _math(c), fontsize=8, ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none"), zorder=2)
    for lam, (x, y) in pos.items():
        ax.text(x, y, _label(lam), ha="center", va="center", fontsize=9,
                bbox=dict(boxstyle="round", fc="#f4f4f4", ec="#555555"), zorder=3)
    ax.set_axis_off()
    ax.set_title(f"coloured Young graph, n = {graph.n}")
    return _save(fig, path)


def plot_check_timings(results: Sequence[CheckResult], path) -> Path:
    """Horizontal bars of wall time per check; failures in red."""
    names = [r.name for r in results]
    fig, ax = plt.subplots(figsize=(7, 0.3 * len(results) + 1))
    ax.barh(range(len(results)), [r.seconds for r in results],
            color=["#4c9f70" if r.passed else "#c0392b" for r in results])
    ax.set_yticks(range(len(results)), names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return _save(fig, path)


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_check_tsv(results: Sequence[CheckResult], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(TSV_FIELDS)
        for r in results:
            w.writerow([r.name, str(r.passed).lower(), f"{r.seconds:.3f}",
                        ";".join(r.failures), r.relation])
    return path


def write_report(results: Sequence[CheckResult], directory) -> dict[str, str]:
    """``check.tsv`` and ``timings.png`` in ``directory``; returns their paths."""
    directory = Path(directory)
    return {
        "table": str(write_check_tsv(results, directory / "check.tsv")),
        "figure": str(plot_check_timings(results, directory / "timings.png")),
    }
