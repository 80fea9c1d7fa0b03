"""Figure rendering for the report paths.

Every CLI command that writes a delimited file can render one companion PNG
next to it.  matplotlib loads lazily with the Agg backend so headless runs
and test environments need no display.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

__all__ = [
    "curve_figure",
    "heatmap_figure",
    "deviation_figure",
    "report_bars_figure",
]

_SAVE_KW = dict(dpi=150, bbox_inches="tight", metadata={"Software": "bc1co"})


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def curve_figure(
    x: Sequence[float],
    series: dict[str, Sequence[float]],
    path: str | Path,
    title: str,
    xlabel: str,
    ylabel: str = "value",
    logy: bool = False,
) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label, ys in series.items():
        ax.plot(x, ys, lw=1.4, label=label)
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(series) > 1:
        ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    path = Path(path)
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path


def heatmap_figure(matrix, path: str | Path, title: str) -> Path:
    import numpy as np

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5.0, 4.2))
    mat = np.asarray(matrix, dtype=float)
    display = np.log10(np.maximum(np.abs(mat), 1e-18))
    im = ax.imshow(display, cmap="viridis")
    fig.colorbar(im, ax=ax, label="log10 |entry|")
    ax.set_title(title)
    ax.set_xlabel("j")
    ax.set_ylabel("i")
    path = Path(path)
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path


def deviation_figure(
    nu: Sequence[float], rel_dev: Sequence[float], tolerance: float, path: str | Path, title: str
) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.semilogy(nu, [max(d, 1e-18) for d in rel_dev], "o-", lw=1.2)
    ax.axhline(tolerance, color="tab:red", ls="--", lw=1.0, label="tolerance")
    ax.set_xlabel("nu")
    ax.set_ylabel("relative deviation")
    ax.set_title(title)
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    path = Path(path)
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path


def report_bars_figure(reports, path: str | Path, title: str = "verification suite") -> Path:
    plt = _pyplot()
    labels = []
    devs = []
    tols = []
    for r in reports:
        tag = r.test
        for key in ("n", "k", "parity", "m_max"):
            if key in r.params:
                tag += f" {key}={r.params[key]}"
        labels.append(tag)
        devs.append(max(r.max_rel_dev, 1e-18))
        tols.append(max(r.tolerance, 1e-18))
    fig_h = max(2.5, 0.28 * len(labels) + 1.2)
    fig, ax = plt.subplots(figsize=(7.0, fig_h))
    ypos = range(len(labels))
    ax.barh(ypos, devs, color=["tab:green" if r.passed else "tab:red" for r in reports])
    for y, tol in zip(ypos, tols):
        ax.plot([tol, tol], [y - 0.4, y + 0.4], color="k", lw=1.0)
    ax.set_xscale("log")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("max relative deviation (ticks: tolerance)")
    ax.set_title(title)
    ax.grid(alpha=0.3, axis="x")
    path = Path(path)
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path
