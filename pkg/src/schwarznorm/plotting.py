"""Figure rendering for the crossing-curve report.

Matplotlib is imported lazily with the Agg backend so that library users
and headless environments never pay for a display toolkit.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np


def save_crossing_figure(
    alphas: np.ndarray,
    values: np.ndarray,
    path: str | Path,
    root: float | None = None,
    dpi: int = 150,
) -> None:
    """Render the curve sin(pi gamma^{-1}(alpha)/2) - alpha to an image file.

    When ``root`` is given, the sign-change point is marked.  The format is
    inferred from the file extension by matplotlib.
    """
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(alphas, values, lw=1.5, color="tab:blue")
    ax.axhline(0.0, color="0.6", lw=0.8)
    if root is not None:
        ax.axvline(root, color="tab:red", lw=0.8, ls="--")
        ax.annotate(f"root = {root:.5f}", xy=(root, 0.0), xytext=(root + 0.03, 0.02),
                    fontsize=9, color="tab:red")
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$\sin(\pi\,\gamma^{-1}(\alpha)/2) - \alpha$")
    ax.set_title("Quasiconformal gain of the convex-to-starlike order map")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
