"""Figure rendering for sweep outputs.

Optional report path: given a sweep result, write PNG figures next to the
CSV. Uses the Agg backend so it works headless.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .harness import SweepResult


def _mean_series(result: SweepResult, column: str) -> tuple[np.ndarray, np.ndarray]:
    rows = [r for r in result.rows if r["trial"] == "mean"]
    t = np.array([r["time"] for r in rows])
    y = np.array([r[column] for r in rows])
    return t, y


def render_sweep_figures(result: SweepResult, csv_path: str | Path) -> list[Path]:
    """Render one figure per available observable group; returns the paths."""
    csv_path = Path(csv_path)
    stem = csv_path.with_suffix("")
    made: list[Path] = []

    groups: list[tuple[str, list[str], str]] = []
    cols = set(result.columns)
    if "abs_r1" in cols:
        factor_cols = [c for c in ("abs_r1", "abs_r2", "abs_r12p", "abs_r12m") if c in cols]
        groups.append(("factors", factor_cols, "|r(t)|"))
    ce_cols = [c for c in ("concurrence", "entropy") if c in cols]
    if ce_cols:
        groups.append(("entanglement", ce_cols, "entanglement"))
    if "S1" in cols:
        groups.append(("chsh", ["S1", "S2", "S3", "S4"], "S"))

    for name, columns, ylabel in groups:
        fig, ax = plt.subplots(figsize=(6, 4))
        for col in columns:
            t, y = _mean_series(result, col)
            ax.plot(t, y, label=col)
        if name == "chsh":
            for bound in (2.0, -2.0):
                ax.axhline(bound, color="gray", lw=0.8, ls="--")
        ax.set_xlabel("time")
        ax.set_ylabel(ylabel)
        ax.set_title(f"{result.config.scenario}, initial state {result.config.bell_index}")
        ax.legend(fontsize=8)
        fig.tight_layout()
        out = Path(f"{stem}_{name}.png")
        fig.savefig(out, dpi=120)
        plt.close(fig)
        made.append(out)
    return made


def render_fit_figure(
    times, moduli, a_hat: float, out_path: str | Path
) -> Path:
    """Overlay the measured envelope with the fitted Gaussian."""
    out_path = Path(out_path)
    times = np.asarray(times, dtype=float)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(times, moduli, label="|r(t)|")
    ax.plot(times, np.exp(-a_hat * times**2), "--", label=f"exp(-{a_hat:.4g} t^2)")
    ax.set_xlabel("time")
    ax.set_ylabel("modulus")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
    return out_path
