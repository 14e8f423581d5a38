"""Figures for bench records."""

from __future__ import annotations

import math
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_bench(records: Iterable[dict], path: str) -> None:
    """Iterations and wall time against n on log-log axes, with a sqrt(n)
    guide through the first point."""
    recs = sorted(records, key=lambda r: r["n"])
    if not recs:
        raise ValueError("no records to plot")
    ns = [r["n"] for r in recs]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    its = [max(r["iterations"], 1) for r in recs]
    ax1.loglog(ns, its, "o-", label="iterations")
    guide = [its[0] * math.sqrt(n / ns[0]) for n in ns]
    ax1.loglog(ns, guide, "--", color="gray", label=r"$\propto\sqrt{n}$")
    ax1.set_xlabel("n")
    ax1.set_ylabel("iterations")
    ax1.legend()
    ax2.loglog(ns, [max(r["seconds"], 1e-6) for r in recs], "s-")
    ax2.set_xlabel("n")
    ax2.set_ylabel("seconds")
    fig.suptitle(f"{recs[0]['family']} family")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
