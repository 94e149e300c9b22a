"""Axis-aligned, origin-centered ellipse fitting by linear least squares
over squared coordinates, with RMSE and eccentricity reporting.

The model is A x² + B y² = 1 with exactly two unknowns, so the normal
equations are a 2x2 system solved in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class DegenerateGeometry(Exception):
    """The point cloud does not determine a real ellipse."""


@dataclass(frozen=True)
class EllipseSpec:
    """Reference ellipse x²/λ² + y²/κ² = 1."""

    lambda_axis: float
    kappa_axis: float

    def __post_init__(self) -> None:
        if self.lambda_axis <= 0 or self.kappa_axis <= 0:
            raise ValueError("ellipse axes must be positive")

    def form_value(self, x: float, y: float) -> float:
        return x * x / self.lambda_axis**2 + y * y / self.kappa_axis**2


#: reference ellipse that the Fibonacci-shifted root clouds approach
REFERENCE_ELLIPSE = EllipseSpec(math.sqrt(5.0), 1.0)


@dataclass(frozen=True)
class EllipseFit:
    """Fitted semi-axes with goodness-of-fit for a root cloud."""

    a_tilde: float
    b_tilde: float
    rmse: float
    eccentricity: float


def _normal_equations(points: Sequence[tuple[float, float]]):
    """Accumulate MᵀM and Mᵀb for M = [x², y²], b = 1."""
    sxx = math.fsum((x * x) ** 2 for x, _ in points)
    syy = math.fsum((y * y) ** 2 for _, y in points)
    sxy = math.fsum((x * x) * (y * y) for x, y in points)
    bx = math.fsum(x * x for x, _ in points)
    by = math.fsum(y * y for _, y in points)
    return sxx, sxy, syy, bx, by


def fit_ellipse(points: Iterable[tuple[float, float]]) -> EllipseFit:
    """Least-squares fit of A x² + B y² = 1 to the points.

    Raises :class:`DegenerateGeometry` when the 2x2 normal matrix is
    (numerically) singular or when the best fit is not elliptic
    (A <= 0 or B <= 0).
    """
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 2:
        raise DegenerateGeometry("at least 2 points required")
    sxx, sxy, syy, bx, by = _normal_equations(pts)
    det = sxx * syy - sxy * sxy
    if abs(det) <= 1e-12 * max(sxx, syy, abs(sxy), 1e-300) ** 2:
        raise DegenerateGeometry("normal matrix is singular (collinear geometry)")
    a_coef = (syy * bx - sxy * by) / det
    b_coef = (sxx * by - sxy * bx) / det
    if a_coef <= 0 or b_coef <= 0:
        raise DegenerateGeometry(
            f"best fit is not an ellipse (A={a_coef:.3g}, B={b_coef:.3g})"
        )
    a_tilde = 1.0 / math.sqrt(a_coef)
    b_tilde = 1.0 / math.sqrt(b_coef)
    return EllipseFit(
        a_tilde=a_tilde,
        b_tilde=b_tilde,
        rmse=rmse(pts, a_tilde, b_tilde),
        eccentricity=eccentricity(a_tilde, b_tilde),
    )


def rmse(points: Iterable[tuple[float, float]], a: float, b: float) -> float:
    """Root-mean-square of the ellipse-form residual x²/a² + y²/b² - 1."""
    if a <= 0 or b <= 0:
        raise ValueError("semi-axes must be positive")
    pts = list(points)
    if not pts:
        raise ValueError("at least one point required")
    total = math.fsum(
        (x * x / (a * a) + y * y / (b * b) - 1.0) ** 2 for x, y in pts
    )
    return math.sqrt(total / len(pts))


def eccentricity(a: float, b: float) -> float:
    """Eccentricity of the ellipse with semi-axes a, b (order-free)."""
    if a <= 0 or b <= 0:
        raise ValueError("semi-axes must be positive")
    lo, hi = min(a, b), max(a, b)
    return math.sqrt(1.0 - (lo / hi) ** 2)
