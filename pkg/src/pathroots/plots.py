"""Figure output: a hand-written SVG for single root-cloud fits and
matplotlib renderings for sweep reports."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import quoteattr

from .fit import REFERENCE_ELLIPSE, EllipseFit

# fixed viewport: [-3, 3] x [-1.6, 1.6] so E(sqrt(5), 1) fits with margin
VIEW_X = (-3.0, 3.0)
VIEW_Y = (-1.6, 1.6)
WIDTH = 720
HEIGHT = 384


def _sx(x: float) -> float:
    return (x - VIEW_X[0]) / (VIEW_X[1] - VIEW_X[0]) * WIDTH


def _sy(y: float) -> float:
    # SVG y axis points down
    return (VIEW_Y[1] - y) / (VIEW_Y[1] - VIEW_Y[0]) * HEIGHT


def root_cloud_svg(
    points: Sequence[tuple[float, float]],
    fit: EllipseFit,
    title: str = "",
) -> str:
    """SVG with one circle marker per root and two ellipse outlines:
    the fitted ellipse and the reference E(√5, 1)."""
    sx_per_unit = WIDTH / (VIEW_X[1] - VIEW_X[0])
    sy_per_unit = HEIGHT / (VIEW_Y[1] - VIEW_Y[0])
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<title>{_escape(title)}</title>' if title else "<title>root cloud</title>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        # reference ellipse E(sqrt(5), 1)
        f'<ellipse cx="{_sx(0):.2f}" cy="{_sy(0):.2f}" '
        f'rx="{REFERENCE_ELLIPSE.lambda_axis * sx_per_unit:.2f}" '
        f'ry="{REFERENCE_ELLIPSE.kappa_axis * sy_per_unit:.2f}" '
        'fill="none" stroke="#888888" stroke-dasharray="6 4" stroke-width="1.5"/>',
        # fitted ellipse
        f'<ellipse cx="{_sx(0):.2f}" cy="{_sy(0):.2f}" '
        f'rx="{fit.a_tilde * sx_per_unit:.2f}" '
        f'ry="{fit.b_tilde * sy_per_unit:.2f}" '
        'fill="none" stroke="#1f77b4" stroke-width="1.5"/>',
    ]
    for x, y in points:
        parts.append(
            f'<circle cx="{_sx(x):.2f}" cy="{_sy(y):.2f}" r="3" '
            'fill="#d62728" fill-opacity="0.8"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def _escape(text: str) -> str:
    return quoteattr(text)[1:-1]


def write_sweep_figures(rows: list[dict], out_dir: Path) -> list[Path]:
    """Render degree-vs-RMSE and degree-vs-axes figures for a sweep.

    Rows with error markers are skipped.  Returns the written paths.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ok = [r for r in rows if r.get("error") is None]
    if not ok:
        return []
    ns = [r["n"] for r in ok]
    written = []

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(ns, [r["rmse"] for r in ok], "o-", color="#1f77b4")
    ax.set_xlabel("polynomial degree n")
    ax.set_ylabel("ellipse-fit RMSE")
    ax.set_yscale("log")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = out_dir / "rmse_vs_degree.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(ns, [r["a_tilde"] for r in ok], "o-", label="semi-major ã")
    ax.plot(ns, [r["b_tilde"] for r in ok], "s-", label="semi-minor b̃")
    ax.axhline(math.sqrt(5.0), color="gray", ls="--", lw=1, label="√5")
    ax.axhline(1.0, color="gray", ls=":", lw=1, label="1")
    ax.set_xlabel("polynomial degree n")
    ax.set_ylabel("fitted semi-axis")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = out_dir / "axes_vs_degree.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    return written
