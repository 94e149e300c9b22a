"""Theorem- and conjecture-level checks that tie the exact polynomial
layer, the adaptive root solver, and the ellipse fitter together.

Exactly decidable statements (identities, root counts, rational point
evaluations) are checked with zero tolerance; geometric statements about
floating roots carry an explicit tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .fit import DegenerateGeometry, fit_ellipse
from .poly import GaussianRational, eval_exact, path_charpoly
from .report import VerificationReport
from .roots import PrecisionConfig, RootSet, ShiftedProblem, real_root_count_exact, solve
from .seq import binomial, fibonacci

SQRT5 = math.sqrt(5.0)


def _fib_shift_roots(n: int, cfg: PrecisionConfig) -> RootSet:
    return solve(ShiftedProblem.for_path(n, fibonacci(n + 1)), cfg)


def containment_check(
    n: int, tol: float = 1e-9, cfg: PrecisionConfig = PrecisionConfig()
) -> VerificationReport:
    """Are all roots of f_n(λ) = F_{n+1} inside the ellipse E(√5, 1)?

    Guaranteed for n ≡ 0 (mod 4); other n are allowed and the report is
    marked exploratory.
    """
    roots = _fib_shift_roots(n, cfg)
    worst = max(x * x / 5.0 + y * y for x, y in roots.as_floats())
    max_re = roots.max_abs_real()
    max_im = roots.max_abs_imag()
    passed = (
        worst <= 1.0 + tol and max_im <= 1.0 + tol and max_re <= SQRT5 + tol
    )
    return VerificationReport(
        check_name="ellipse_containment",
        subject={"n": n, "c": fibonacci(n + 1), "guaranteed": n % 4 == 0},
        passed=passed,
        witnesses={
            "max_ellipse_form": worst,
            "max_abs_re": max_re,
            "max_abs_im": max_im,
            "re_bound": SQRT5,
            "im_bound": 1.0,
        },
        tolerance_used=tol,
    )


def imaginary_root_check(k: int, samples: Iterable[Fraction]) -> VerificationReport:
    """f_{4k}(a i) = F_{4k+1} exactly when a = ±1, and for no sampled
    rational a outside {±1}.  All evaluations are exact."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 4 * k
    f = path_charpoly(n)
    target = GaussianRational.of(fibonacci(n + 1))
    at_i = eval_exact(f, GaussianRational.of(0, 1))
    at_minus_i = eval_exact(f, GaussianRational.of(0, -1))
    witnesses: dict = {
        "f(i)": str(at_i),
        "f(-i)": str(at_minus_i),
        "target": str(target),
    }
    passed = at_i == target and at_minus_i == target
    for a in samples:
        a = Fraction(a)
        if a in (1, -1):
            raise ValueError("samples must exclude ±1")
        value = eval_exact(f, GaussianRational.of(0, a))
        if value == target:
            passed = False
            witnesses[f"counterexample a={a}"] = str(value)
    return VerificationReport(
        check_name="imaginary_root_uniqueness",
        subject={"k": k, "n": n},
        passed=passed,
        witnesses=witnesses,
        tolerance_used="exact",
    )


def eq1_monotonicity_check(k: int, a: Fraction) -> VerificationReport:
    """Compare g(a) = Σ_j (a²)^{2k-j} C(4k-j, j) against F_{4k+1} exactly.

    Strictly below for |a| < 1, equal for |a| = 1, strictly above for
    |a| > 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a = Fraction(a)
    a2 = a * a
    g = sum(a2 ** (2 * k - j) * binomial(4 * k - j, j) for j in range(2 * k + 1))
    target = fibonacci(4 * k + 1)
    if abs(a) < 1:
        passed = g < target
        relation = "<"
    elif abs(a) == 1:
        passed = g == target
        relation = "="
    else:
        passed = g > target
        relation = ">"
    return VerificationReport(
        check_name="weighted_sum_monotonicity",
        subject={"k": k, "a": str(a)},
        passed=passed,
        witnesses={"sum": str(g), "fibonacci": target, "expected_relation": relation},
        tolerance_used="exact",
    )


def real_count_conjecture_check(n: int) -> VerificationReport:
    """Exact real-root counts of f_n(λ) = F_{n+1}: two distinct real
    roots for even n, a single negative real root for odd n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    count, negative = real_root_count_exact(
        ShiftedProblem.for_path(n, fibonacci(n + 1))
    )
    if n % 2 == 0:
        passed = count == 2
    else:
        passed = count == 1 and negative == 1
    return VerificationReport(
        check_name="real_root_count",
        subject={"n": n, "c": fibonacci(n + 1)},
        passed=passed,
        witnesses={"count": count, "negative_count": negative},
        tolerance_used="exact",
    )


def boundary_residual(n: int, cfg: PrecisionConfig = PrecisionConfig()) -> float:
    """Max deviation of the roots of f_n(λ) = F_{n+1} from the reference
    ellipse form: max_k |Re²/5 + Im² - 1|."""
    if n < 3:
        raise ValueError("n must be >= 3")
    roots = _fib_shift_roots(n, cfg)
    return max(abs(x * x / 5.0 + y * y - 1.0) for x, y in roots.as_floats())


def conjecture_suite(
    n_max: int,
    cfg: PrecisionConfig = PrecisionConfig(),
    tol: float = 1e-9,
) -> list[VerificationReport]:
    """Per-n sweep of the root-distribution conjecture items.

    Ellipse fit quality and max-|Re| are reported, never asserted (the
    underlying claims are open); the imaginary-part bound is asserted
    only where proven (n ≡ 0 mod 4); real-root counts are asserted
    everywhere because the exact counter decides them.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    reports = []
    for n in range(1, n_max + 1):
        witnesses: dict = {}
        roots = _fib_shift_roots(n, cfg)
        try:
            fit = fit_ellipse(roots.as_floats())
            witnesses["a_tilde"] = fit.a_tilde
            witnesses["b_tilde"] = fit.b_tilde
            witnesses["rmse"] = fit.rmse
            witnesses["eccentricity"] = fit.eccentricity
        except DegenerateGeometry as exc:
            witnesses["fit"] = f"degenerate: {exc}"
        witnesses["max_abs_re"] = roots.max_abs_real()
        witnesses["max_abs_im"] = roots.max_abs_imag()
        passed = True
        if n % 4 == 0 and roots.max_abs_imag() > 1.0 + tol:
            passed = False
            witnesses["imag_bound_violation"] = roots.max_abs_imag()
        count_report = real_count_conjecture_check(n)
        witnesses["real_count"] = count_report.witnesses
        if not count_report.passed:
            passed = False
        reports.append(
            VerificationReport(
                check_name="conjecture_suite",
                subject={"n": n, "c": fibonacci(n + 1)},
                passed=passed,
                witnesses=witnesses,
                tolerance_used=tol,
            )
        )
    return reports


def boundary_trend(
    ns: Sequence[int],
    cfg: PrecisionConfig = PrecisionConfig(),
    slack: float = 1.10,
) -> VerificationReport:
    """Is the boundary residual (weakly) decreasing along ``ns``?

    A ``slack`` factor tolerates small non-monotonic wiggles; only the
    trend is claimed.
    """
    values = [(n, boundary_residual(n, cfg)) for n in ns]
    passed = all(
        b2 <= slack * b1 for (_, b1), (_, b2) in zip(values, values[1:])
    )
    return VerificationReport(
        check_name="boundary_residual_trend",
        subject={"ns": list(ns), "slack": slack},
        passed=passed,
        witnesses={f"n={n}": v for n, v in values},
        tolerance_used=slack,
    )
