"""Figure rendering for sweep reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_sweep_chart(rows: list[dict], path: str) -> None:
    """Render b*window_diff and b*llt_err against n (log-x) to a file.

    The output format follows the file extension (svg, png, pdf, ...).
    """
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(ns, [r["b_window_diff"] for r in rows], marker="o",
            label="b · window sup-diff")
    ax.plot(ns, [r["b_llt_err"] for r in rows], marker="s",
            label="b · llt error")
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("scaled statistic")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
