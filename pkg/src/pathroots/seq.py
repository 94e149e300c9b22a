"""Exact integer sequences: Fibonacci, Pell, binomials, and the
Fibonacci-binomial summation identity.

Everything here is plain Python integer arithmetic, so values are exact at
any index reached in practice (a few thousand).
"""

from __future__ import annotations

import math

from .report import VerificationReport


def fibonacci(n: int) -> int:
    """Return F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pell(n: int) -> int:
    """Return P_n with P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}."""
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with C(n, k) = 0 when k > n.

    Permitting k > n keeps summation bounds in closed formulas simple.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        return 0
    return math.comb(n, k)


def fib_binomial_identity_check(k: int) -> VerificationReport:
    """Check the shallow-diagonal identity sum_j C(4k-j, j) = F_{4k+1}.

    The sum runs over j = 0..2k.  Both sides are computed exactly; a
    mismatch yields a failing report, not an exception.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    lhs = sum(binomial(4 * k - j, j) for j in range(2 * k + 1))
    rhs = fibonacci(4 * k + 1)
    return VerificationReport(
        check_name="fib_binomial_identity",
        subject={"k": k},
        passed=lhs == rhs,
        witnesses={"sum": lhs, "fibonacci": rhs},
        tolerance_used="exact",
    )
