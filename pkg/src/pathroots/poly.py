"""Exact integer polynomials for path/cycle graph spectra and Chebyshev
families, plus exact Gaussian-rational evaluation.

Coefficients are stored dense, lowest degree first, as Python integers.
The polynomial families here stay below degree a few thousand, where dense
storage is the right trade-off.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .report import VerificationReport
from .seq import binomial, fibonacci


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial with exact integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (0,)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial((0,))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * x for x in self.coeffs))

    def shift_constant(self, c: int) -> "IntPolynomial":
        """Return self - c (subtract a constant)."""
        out = list(self.coeffs)
        out[0] -= c
        return IntPolynomial(tuple(out))

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float, mpfr, ..."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def serialize(self) -> str:
        """Space-separated decimal coefficients, lowest degree first."""
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return cls(tuple(int(tok) for tok in text.split()))

    def pretty(self, var: str = "λ") -> str:
        """Human-readable form, highest degree first."""
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                pw = var if k == 1 else f"{var}^{k}"
                body = pw if mag == 1 else f"{mag}{pw}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __str__(self) -> str:
        return f"({self.re}) + ({self.im})i"


I_UNIT = GaussianRational.of(0, 1)


def i_power(m: int) -> GaussianRational:
    """Return i**m for any integer m."""
    return (
        GaussianRational.of(1),
        I_UNIT,
        GaussianRational.of(-1),
        GaussianRational.of(0, -1),
    )[m % 4]


def path_charpoly(n: int) -> IntPolynomial:
    """det(A(P_n) - λI) via the binomial closed form.

    Nonzero coefficients sit at exponents n, n-2, n-4, ...; the leading
    coefficient is (-1)^n.
    """
    if n < 1:
        raise ValueError("path order must be >= 1")
    out = [0] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = (-1) ** (n + k) * binomial(n - k, k)
    return IntPolynomial(tuple(out))


def path_charpoly_recursive(n: int) -> IntPolynomial:
    """Same polynomial, built from the three-term recurrence
    f_n = -λ f_{n-1} - f_{n-2} seeded with f_1 = -λ, f_2 = λ² - 1.
    """
    if n < 1:
        raise ValueError("path order must be >= 1")
    f1 = IntPolynomial((0, -1))
    if n == 1:
        return f1
    f2 = IntPolynomial((-1, 0, 1))
    prev, cur = f1, f2
    neg_lambda = IntPolynomial((0, -1))
    for _ in range(n - 2):
        prev, cur = cur, neg_lambda * cur - prev
    return cur


def chebyshev_u(n: int) -> IntPolynomial:
    """Chebyshev polynomial of the second kind U_n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    u0 = IntPolynomial((1,))
    if n == 0:
        return u0
    u1 = IntPolynomial((0, 2))
    two_x = IntPolynomial((0, 2))
    prev, cur = u0, u1
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def chebyshev_t(n: int) -> IntPolynomial:
    """Chebyshev polynomial of the first kind T_n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    t0 = IntPolynomial((1,))
    if n == 0:
        return t0
    t1 = IntPolynomial((0, 1))
    two_x = IntPolynomial((0, 2))
    prev, cur = t0, t1
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def compose_u_neg_half(n: int) -> IntPolynomial:
    """Substitute x ↦ -x/2 into U_n over exact rationals.

    Every coefficient of the result must come out integral; a fractional
    coefficient would falsify the identity tying U_n to the path
    polynomial, so it raises instead of rounding.
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    u = chebyshev_u(n)
    out = []
    for k, c in enumerate(u.coeffs):
        v = Fraction(c) * Fraction(-1, 2) ** k
        if v.denominator != 1:
            raise ArithmeticError(
                f"non-integral coefficient {v} at degree {k} for n={n}"
            )
        out.append(v.numerator)
    return IntPolynomial(tuple(out))


def eval_exact(p: IntPolynomial, z: GaussianRational) -> GaussianRational:
    """Exact Horner evaluation of p at a Gaussian-rational point."""
    acc = GaussianRational.of(0)
    for c in reversed(p.coeffs):
        acc = acc * z + GaussianRational.of(c)
    return acc


def lemma_fib_check(n: int) -> VerificationReport:
    """Check U_n(-i/2) = i^{3n} F_{n+1} by exact recurrence.

    The Chebyshev recurrence is run directly at the point -i/2 in
    Gaussian-rational arithmetic; coefficients are never expanded.
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    point = GaussianRational.of(0, Fraction(-1, 2))
    two_x = point * GaussianRational.of(2)
    prev = GaussianRational.of(1)          # U_0(-i/2)
    cur = two_x                            # U_1(-i/2)
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    expected = i_power(3 * n) * GaussianRational.of(fibonacci(n + 1))
    return VerificationReport(
        check_name="chebyshev_u_fibonacci_lemma",
        subject={"n": n},
        passed=cur == expected,
        witnesses={"value": str(cur), "expected": str(expected)},
        tolerance_used="exact",
    )


def cycle_charpoly(n: int) -> IntPolynomial:
    """det(A(C_n) - λI) computed from the determinant definition.

    The cyclic-tridiagonal determinant is evaluated exactly at n+1
    integer points λ = 3, 4, ..., n+3 (all leading principal minors are
    nonzero there, so elimination needs no pivoting) and the integer
    coefficients are recovered by Newton interpolation.  This route is
    deliberately independent of the path-polynomial recurrence so it can
    serve as ground truth for recursion checks.
    """
    if n < 3:
        raise ValueError("cycle order must be >= 3")
    points = list(range(3, 3 + n + 1))
    values = [_cycle_det_at(n, lam) for lam in points]
    coeffs = _newton_interpolate(points, values)
    if len(coeffs) != n + 1:
        # interpolation drops exact trailing zeros; degree must be n
        coeffs = coeffs + [0] * (n + 1 - len(coeffs))
    return IntPolynomial(tuple(coeffs))


def _cycle_det_at(n: int, lam: int) -> Fraction:
    """det(A(C_n) - λI) at an integer λ with |λ| > 2.

    Gaussian elimination on the cyclic tridiagonal matrix: fill is
    confined to the last row and column, giving O(n) exact steps.
    """
    d = Fraction(-lam)
    p = d            # current pivot (i, i)
    u = Fraction(1)  # current (i, n-1) entry
    v = Fraction(1)  # current (n-1, i) entry
    w = d            # current (n-1, n-1) entry
    det = Fraction(1)
    for i in range(n - 2):
        # band entry (i+1, n-1) / (n-1, i+1) exists only next to the corner
        boundary = Fraction(1 if i + 1 == n - 2 else 0)
        det *= p
        w -= v * u / p
        u, v = boundary - u / p, boundary - v / p
        p = d - 1 / p
    return det * (p * w - u * v)


def _newton_interpolate(points: list[int], values: list[Fraction]) -> list[int]:
    """Interpolate exact integer coefficients through (points, values)."""
    m = len(points)
    coef = [Fraction(v) for v in values]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j])
    # expand the Newton form into monomial coefficients
    poly = [Fraction(0)] * m
    for k in range(m - 1, -1, -1):
        # poly <- poly * (x - points[k]) + coef[k]
        carry = [Fraction(0)] * m
        for i in range(m - 1):
            carry[i + 1] += poly[i]
            carry[i] -= poly[i] * points[k]
        carry[0] += coef[k]
        poly = carry
    out = []
    for v in poly:
        if v.denominator != 1:
            raise ArithmeticError("interpolation yielded non-integer coefficient")
        out.append(v.numerator)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def content(coeffs: tuple[int, ...]) -> int:
    """GCD of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g
