"""Figure rendering for the CLI report path.

Renders the deviation series and histogram comparisons to image files
next to the CSV output.  Styling is deliberately plain: single panel,
reference lines at +-1 for deviation plots, normal density overlay for
histograms.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analysis import DeltaPoint, Histogram, normal_pdf


def save_delta_plot(
    points: Sequence[DeltaPoint],
    path: str,
    title: str,
    ylabel: str = "delta(n)",
) -> None:
    ns = [p.n for p in points if p.delta is not None]
    deltas = [p.delta for p in points if p.delta is not None]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(ns, deltas, lw=0.8)
    ax.axhline(1.0, color="gray", ls="--", lw=0.8)
    ax.axhline(-1.0, color="gray", ls="--", lw=0.8)
    ax.axhline(0.0, color="gray", ls=":", lw=0.6)
    ax.set_xlabel("n")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_histogram_plot(hist: Histogram, path: str, title: str) -> None:
    lo_edges = [a for a, _ in hist.edges()[1:-1]]
    counts = hist.counts[1:-1]
    density = np.array(counts, dtype=float) / (hist.total * hist.width)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(lo_edges, density, width=hist.width, align="edge",
           alpha=0.6, edgecolor="black", linewidth=0.3)
    xs = np.linspace(hist.lo, hist.hi, 400)
    ax.plot(xs, [normal_pdf(x) for x in xs], "k-", lw=1.2)
    ax.set_xlabel("normalized digit-sum value")
    ax.set_ylabel("density")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
