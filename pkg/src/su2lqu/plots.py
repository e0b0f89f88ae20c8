"""Render sweep results as figure files next to the CSV output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams.update({
    "figure.dpi": 110,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
})


def save_sweep_p_figure(rows, path, title: str | None = None) -> None:
    """Line plot of LQU vs P, numeric minima overlaid when present."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ps = [row.p for row in rows]
    ax.plot(ps, [row.lqu_closed for row in rows], lw=1.6, label="closed form")
    numeric = [(row.p, row.lqu_numeric) for row in rows if row.lqu_numeric is not None]
    if numeric:
        ax.plot([p for p, _ in numeric], [v for _, v in numeric], ".", ms=4,
                label="numeric minimum")
        ax.legend(frameon=False)
    ax.set_xlabel("P")
    ax.set_ylabel("LQU")
    ax.set_xlim(0.0, 1.0)
    ax.set_ylim(bottom=0.0)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_sweep_pq_figure(rows, path, title: str | None = None) -> None:
    """Triangulated surface of LQU over the (P, Q) simplex."""
    fig = plt.figure(figsize=(6.8, 5.0))
    ax = fig.add_subplot(projection="3d")
    ax.plot_trisurf([row.p for row in rows],
                    [row.q for row in rows],
                    [row.lqu_closed for row in rows],
                    cmap="viridis", linewidth=0.1, antialiased=True)
    ax.set_xlabel("P")
    ax.set_ylabel("Q")
    ax.set_zlabel("LQU")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
