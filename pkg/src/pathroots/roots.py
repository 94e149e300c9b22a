"""Adaptive-precision complex root solving and exact real-root counting
for shifted path-graph characteristic polynomials.

The floating solver is a simultaneous Aberth-Ehrlich iteration over
gmpy2's MPC complex numbers, doubling the working precision until a
per-root error bound meets the requested tolerance.  The real-root
counter is a Sturm sign-variation chain over exact rationals and is the
authority whenever the two disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
from gmpy2 import mpc, mpfr

from .poly import IntPolynomial, content, path_charpoly


class SolverError(Exception):
    """Base class for root-solver failures."""


class DegreeZero(SolverError):
    """The shifted polynomial is constant; there is nothing to solve."""


class PrecisionExhausted(SolverError):
    """The precision ladder hit its cap before the roots converged."""


@dataclass(frozen=True)
class PrecisionConfig:
    """Adaptive-precision settings for :func:`solve`."""

    start_bits: int = 128
    max_bits: int = 16384
    tolerance: float = 1e-12
    max_iterations: int = 500

    def __post_init__(self) -> None:
        if self.start_bits < 53:
            raise ValueError("start_bits must be >= 53")
        if self.max_bits < self.start_bits:
            raise ValueError("max_bits must be >= start_bits")


@dataclass(frozen=True)
class ShiftedProblem:
    """The equation f_n(λ) = c, stored as the polynomial f_n - c."""

    n: int
    c: int
    shifted: IntPolynomial

    @classmethod
    def for_path(cls, n: int, c: int) -> "ShiftedProblem":
        return cls(n=n, c=int(c), shifted=path_charpoly(n).shift_constant(int(c)))


@dataclass(frozen=True)
class RootSet:
    """All complex roots of one shifted problem, sorted by (re, im)."""

    roots: tuple[mpc, ...]
    residual_bound: float
    precision_bits: int
    residuals: tuple[float, ...] = ()
    has_coincident_roots: bool = False

    def as_floats(self) -> list[tuple[float, float]]:
        return [(float(z.real), float(z.imag)) for z in self.roots]

    def max_abs_real(self) -> float:
        return max(abs(float(z.real)) for z in self.roots)

    def max_abs_imag(self) -> float:
        return max(abs(float(z.imag)) for z in self.roots)


def _eval_with_scale(coeffs, abs_coeffs, z):
    """Return (p(z), p'(z), S) where S = max_k |c_k| max(1,|z|)^k."""
    p = mpc(0)
    dp = mpc(0)
    for a in reversed(coeffs):
        dp = dp * z + p
        p = p * z + a
    m = max(mpfr(1), abs(z))
    scale = mpfr(0)
    mk = mpfr(1)
    for ak in abs_coeffs:
        v = ak * mk
        if v > scale:
            scale = v
        mk *= m
    return p, dp, scale


def _initial_circle(c_int, n, prec):
    """Starting points: a circle at the geometric-mean root radius,
    rotated 0.3 rad off axis to break the even/odd symmetry of f_n."""
    lead = abs(c_int[-1])
    tail = abs(c_int[0])
    if tail != 0:
        radius = math.exp((math.log(tail) - math.log(lead)) / n)
    else:
        radius = 1.0 + max(abs(x) for x in c_int[:-1]) ** (1.0 / n)
    return [
        mpc(
            radius * math.cos(2 * math.pi * k / n + 0.3),
            radius * math.sin(2 * math.pi * k / n + 0.3),
        )
        for k in range(n)
    ]


def _aberth_pass(c_int, prec, z0, max_iterations):
    """Run Aberth-Ehrlich at fixed precision; return approximations."""
    n = len(c_int) - 1
    coeffs = [mpfr(x) for x in c_int]
    abs_coeffs = [abs(x) for x in coeffs]
    z = [mpc(w) for w in z0]
    stop = mpfr(2) ** (-prec + 6) * n
    done = [False] * n
    for _ in range(max_iterations):
        n_done = 0
        for i in range(n):
            if done[i]:
                n_done += 1
                continue
            zi = z[i]
            p, dp, scale = _eval_with_scale(coeffs, abs_coeffs, zi)
            if abs(p) <= stop * scale:
                done[i] = True
                n_done += 1
                continue
            if dp == 0:
                z[i] = zi * mpc("1.000001")
                continue
            newton = p / dp
            s = mpc(0)
            for j in range(n):
                if j != i:
                    s += 1 / (zi - z[j])
            denom = 1 - newton * s
            z[i] = zi - (newton if denom == 0 else newton / denom)
        if n_done == n:
            break
    return z


def _error_bounds(c_int, z, prec):
    """Per-root relative error bounds |p| + rounding, over |p'|."""
    coeffs = [mpfr(x) for x in c_int]
    abs_coeffs = [abs(x) for x in coeffs]
    n = len(c_int) - 1
    eps = mpfr(2) ** (-prec + 1)
    bounds = []
    residuals = []
    for zi in z:
        p, dp, scale = _eval_with_scale(coeffs, abs_coeffs, zi)
        residuals.append(float(abs(p) / scale))
        if dp == 0:
            bounds.append(float("inf"))
            continue
        err = (abs(p) + n * eps * scale) / abs(dp)
        bounds.append(float(err / max(mpfr(1), abs(zi))))
    return bounds, residuals


def solve(problem: ShiftedProblem, cfg: PrecisionConfig = PrecisionConfig()) -> RootSet:
    """Find all complex roots of the shifted polynomial.

    Precision starts at ``cfg.start_bits`` and doubles (warm-starting
    from the previous approximations) until every root's error bound is
    below ``cfg.tolerance`` relative to max(1, |root|).  Deterministic
    for fixed (problem, cfg).
    """
    c_int = list(problem.shifted.coeffs)
    n = len(c_int) - 1
    if n == 0:
        raise DegreeZero(f"shifted polynomial for n={problem.n}, c={problem.c} is constant")
    prec = cfg.start_bits
    z = None
    while True:
        with gmpy2.context(precision=prec):
            z0 = _initial_circle(c_int, n, prec) if z is None else [mpc(w) for w in z]
            z = _aberth_pass(c_int, prec, z0, cfg.max_iterations)
            bounds, residuals = _error_bounds(c_int, z, prec)
            if max(bounds) <= cfg.tolerance and max(residuals) <= cfg.tolerance:
                # sort on the double-rounded keys so the emitted float
                # ordering is lexicographic even when conjugate pairs
                # share a rounded real part
                order = sorted(
                    range(n), key=lambda i: (float(z[i].real), float(z[i].imag))
                )
                roots = tuple(z[i] for i in order)
                coincident = _any_coincident(roots, bounds)
                return RootSet(
                    roots=roots,
                    residual_bound=max(residuals),
                    precision_bits=prec,
                    residuals=tuple(residuals[i] for i in order),
                    has_coincident_roots=coincident,
                )
        if prec >= cfg.max_bits:
            raise PrecisionExhausted(
                f"no convergence for n={problem.n}, c={problem.c} at {prec} bits"
            )
        prec = min(2 * prec, cfg.max_bits)


def _any_coincident(roots, bounds) -> bool:
    """Flag roots whose error regions overlap (possible multiplicity)."""
    b = max(bounds)
    for i in range(1, len(roots)):
        if abs(roots[i] - roots[i - 1]) <= 4 * b:
            return True
    return False


# ---------------------------------------------------------------------------
# Exact real-root counting (Sturm chains over rationals)
# ---------------------------------------------------------------------------


def _primitive(coeffs: list[Fraction]) -> list[int]:
    """Scale a rational polynomial by a positive constant to a primitive
    integer polynomial (sign pattern preserved)."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = content(tuple(ints))
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _poly_rem(a: list[int], b: list[int]) -> list[int]:
    """Primitive remainder of a / b over the rationals (positive scaling)."""
    r = [Fraction(c) for c in a]
    bb = [Fraction(c) for c in b]
    db = len(bb) - 1
    lead_b = bb[-1]
    while len(r) - 1 >= db and any(r):
        dr = len(r) - 1
        q = r[-1] / lead_b
        for i in range(db + 1):
            r[dr - db + i] -= q * bb[i]
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
    if not any(r):
        return [0]
    return _primitive(r)


def _sturm_chain(coeffs: tuple[int, ...]) -> list[list[int]]:
    chain = [list(coeffs)]
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    if not deriv:
        return chain
    chain.append(deriv)
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if rem == [0]:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(signs: list[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)


def _sign_at_pos_inf(p: list[int]) -> int:
    return 1 if p[-1] > 0 else -1 if p[-1] < 0 else 0


def _sign_at_neg_inf(p: list[int]) -> int:
    s = _sign_at_pos_inf(p)
    return s if (len(p) - 1) % 2 == 0 else -s


def real_root_count_exact(problem: ShiftedProblem) -> tuple[int, int]:
    """Exact (distinct real roots, distinct negative real roots).

    Pure rational arithmetic; multiple roots are counted once.  Zero
    roots are stripped first so the Sturm endpoints are never roots.
    """
    coeffs = list(problem.shifted.coeffs)
    if len(coeffs) == 1:
        raise DegreeZero("constant polynomial has no well-defined root count")
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if len(coeffs) == 1:
        return (1, 0) if zero_mult else (0, 0)
    chain = _sturm_chain(tuple(coeffs))
    v_neg = _variations([_sign_at_neg_inf(p) for p in chain])
    v_pos = _variations([_sign_at_pos_inf(p) for p in chain])
    v_zero = _variations([(0 if p[0] == 0 else (1 if p[0] > 0 else -1)) for p in chain])
    count = v_neg - v_pos
    negative = v_neg - v_zero
    if zero_mult:
        count += 1
    return count, negative


def path_zero_roots(n: int, precision_bits: int = 53) -> list[mpfr]:
    """The exact eigenvalues of the path graph: 2 cos(sπ/(n+1)),
    s = 1..n, ascending."""
    if n < 1:
        raise ValueError("path order must be >= 1")
    with gmpy2.context(precision=precision_bits):
        pi = gmpy2.const_pi()
        vals = [2 * gmpy2.cos(s * pi / (n + 1)) for s in range(n, 0, -1)]
    return vals
