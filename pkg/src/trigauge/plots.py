"""Render sweep results as figures next to the tabular output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

VERDICT_COLORS = {
    "undetectable": "#d62728",
    "indeterminate": "#ff8c00",
    "detectable": "#2ca02c",
}
VERDICT_ORDER = ("undetectable", "indeterminate", "detectable")


def render_sweep_figure(rows, path, title: str | None = None) -> None:
    """Two-panel summary of a sweep: clustering vs. parameter, verdict mix.

    Top panel: per-graph global clustering (log scale) colored by verdict,
    with the ensemble means of the two decision thresholds overlaid; the
    shaded strip between them is the indeterminate band.  Bottom panel:
    verdict fractions per grid point.
    """
    ok = [r for r in rows if not r.error and r.gcc is not None]
    if not ok:
        raise ValueError("no successful rows to plot")
    xs = np.array([0.0 if r.value is None else r.value for r in ok])
    gcc = np.array([r.gcc for r in ok])
    c_uc = np.array([r.c_uc for r in ok])
    bound = np.array([r.detectability_bound for r in ok])
    verdicts = [r.classification for r in ok]
    grid = np.unique(xs)
    param_name = ok[0].parameter or "run"

    fig, (ax_top, ax_bottom) = plt.subplots(
        2, 1, figsize=(7, 7), sharex=True, height_ratios=[2.2, 1.0]
    )

    jitter_scale = 0.15 * (np.min(np.diff(grid)) if grid.size > 1 else 1.0)
    jitter = np.random.default_rng(0).uniform(-jitter_scale, jitter_scale, xs.size)
    for name in VERDICT_ORDER:
        mask = np.array([v == name for v in verdicts])
        if mask.any():
            ax_top.scatter(xs[mask] + jitter[mask], gcc[mask], s=9, alpha=0.45,
                           color=VERDICT_COLORS[name], label=name, linewidths=0)

    mean_gcc = [gcc[xs == x].mean() for x in grid]
    mean_cuc = np.array([c_uc[xs == x].mean() for x in grid])
    mean_bound = np.array([bound[xs == x].mean() for x in grid])
    ax_top.plot(grid, mean_gcc, "k-", lw=1.4, label="mean clustering")
    ax_top.plot(grid, mean_cuc, "--", color="#555555", lw=1.2, label="uncorrelated baseline")
    ax_top.plot(grid, mean_bound, ":", color="#555555", lw=1.2, label="eigenvalue bound")
    ax_top.fill_between(grid, mean_cuc, mean_bound, color="#cccccc", alpha=0.4)
    ax_top.set_yscale("log")
    ax_top.set_ylabel("global clustering coefficient")
    ax_top.legend(fontsize=8, loc="best")
    if title:
        ax_top.set_title(title)

    width = 0.8 * (np.min(np.diff(grid)) if grid.size > 1 else 1.0)
    bottom = np.zeros(grid.size)
    for name in VERDICT_ORDER:
        frac = np.array([
            np.mean([v == name for v, x0 in zip(verdicts, xs) if x0 == x]) for x in grid
        ])
        ax_bottom.bar(grid, frac, width=width, bottom=bottom,
                      color=VERDICT_COLORS[name], label=name)
        bottom += frac
    ax_bottom.set_ylim(0, 1)
    ax_bottom.set_ylabel("verdict fraction")
    ax_bottom.set_xlabel(param_name)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
