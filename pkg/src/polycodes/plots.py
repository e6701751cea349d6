"""Figure rendering for the report-style CLI paths.

Figures are written straight to files with the Agg backend; nothing here
is interactive.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def weight_distribution_figure(distribution: dict[int, int], path: str, title: str = "Weight distribution") -> None:
    """Bar chart of codeword counts per Hamming weight."""
    weights = sorted(distribution)
    counts = [distribution[w] for w in weights]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(weights, counts, color="#4878a8", edgecolor="black", linewidth=0.5)
    ax.set_xlabel("Hamming weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    ax.set_xticks(weights)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def duality_grid_figure(labels: list[str], equal: list[list[bool]], path: str, title: str = "Dual agreement") -> None:
    """Heatmap of pairwise equality between the computed duals."""
    n = len(labels)
    data = [[1.0 if equal[i][j] else 0.0 for j in range(n)] for i in range(n)]
    fig, ax = plt.subplots(figsize=(4.5, 4))
    ax.imshow(data, cmap="RdYlGn", vmin=0.0, vmax=1.0)
    ax.set_xticks(range(n), labels, rotation=45, ha="right")
    ax.set_yticks(range(n), labels)
    for i in range(n):
        for j in range(n):
            ax.text(j, i, "=" if equal[i][j] else "x", ha="center", va="center")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
