"""Matplotlib figures for the numeric reports.

Imported lazily by the CLI so the library itself does not need matplotlib.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import variety_numeric as vn  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.linewidth": 0.8,
    "lines.linewidth": 1.0,
    "savefig.bbox": "tight",
    "savefig.dpi": 150,
}


def plot_traces(traces: Sequence[vn.TraceResult], d: int, path) -> None:
    """Traced arcs projected to the (theta, psi) torus, exact bridge points marked."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.2, 4.2))
        for tr in traces:
            th = np.mod(tr.theta / (2 * math.pi), 1.0)
            ps = np.mod(tr.psi / (2 * math.pi), 1.0)
            # break the polyline where it wraps
            jump = np.hypot(np.diff(th), np.diff(ps)) > 0.5
            cuts = np.flatnonzero(jump) + 1
            for a, b in zip(np.r_[0, cuts], np.r_[cuts, len(th)]):
                ax.plot(th[a:b], ps[a:b], color="#d62728")
        pts = np.array(vn.exact_sigma_points(d))
        ax.scatter(pts[:, 0], pts[:, 1], s=10, color="black", zorder=3, label="exact bridge points")
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_aspect("equal")
        ax.set_xlabel(r"$\theta$ (turns)")
        ax.set_ylabel(r"$\psi$ (turns)")
        ax.set_title(f"a-arcs of $V_{d}$, {len(traces)} traces")
        ax.legend(loc="upper right", fontsize=7, frameon=False)
        fig.savefig(path)
        plt.close(fig)


def plot_region(d: int, path, grid: int = 200) -> None:
    """The region R_d in the (r, s) square."""
    r = np.linspace(0, 1, grid)
    R, S = np.meshgrid(r, r)
    inside = (R ** (d - 1) - R * S ** (d - 1) < S) & (S < R ** (d - 1) + R * S ** (d - 1))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(3.6, 3.6))
        ax.contourf(R, S, inside.astype(float), levels=[0.5, 1.5], colors=["#1f77b4"], alpha=0.4)
        ax.set_xlabel("r")
        ax.set_ylabel("s")
        ax.set_aspect("equal")
        ax.set_title(f"$R_{d}$")
        fig.savefig(path)
        plt.close(fig)
