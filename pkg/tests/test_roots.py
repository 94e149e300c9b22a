import math

import gmpy2
import pytest

from pathroots.poly import IntPolynomial
from pathroots.roots import (
    DegreeZero,
    PrecisionConfig,
    PrecisionExhausted,
    ShiftedProblem,
    path_zero_roots,
    real_root_count_exact,
    solve,
)
from pathroots.seq import fibonacci, pell

CFG = PrecisionConfig()


def fib_problem(n):
    return ShiftedProblem.for_path(n, fibonacci(n + 1))


class TestSolve:
    def test_linear(self):
        rs = solve(ShiftedProblem.for_path(1, 1), CFG)
        (root,) = rs.as_floats()
        assert root == pytest.approx((-1.0, 0.0), abs=1e-12)

    def test_quadratic(self):
        rs = solve(ShiftedProblem.for_path(2, 2), CFG)
        xs = [x for x, _ in rs.as_floats()]
        assert xs == pytest.approx([-math.sqrt(3), math.sqrt(3)], abs=1e-12)

    def test_unshifted_quartic_golden(self):
        rs = solve(ShiftedProblem.for_path(4, 0), CFG)
        phi = (1 + math.sqrt(5)) / 2
        xs = [x for x, _ in rs.as_floats()]
        assert xs == pytest.approx([-phi, -(phi - 1), phi - 1, phi], abs=1e-12)

    def test_sorted_lexicographically(self):
        rs = solve(fib_problem(12), CFG)
        keys = [(float(z.real), float(z.imag)) for z in rs.roots]
        assert keys == sorted(keys)

    def test_cardinality_matches_degree(self):
        for n in (1, 2, 7, 30):
            assert len(solve(fib_problem(n), CFG).roots) == n

    def test_degree_zero_rejected(self):
        constant = ShiftedProblem(n=1, c=0, shifted=IntPolynomial((7,)))
        with pytest.raises(DegreeZero):
            solve(constant, CFG)

    def test_precision_exhausted(self):
        # n=200 is known to need more than 128 bits for tol 1e-12
        cramped = PrecisionConfig(start_bits=128, max_bits=128)
        with pytest.raises(PrecisionExhausted):
            solve(fib_problem(200), cramped)

    def test_determinism(self):
        a = solve(fib_problem(15), CFG)
        b = solve(fib_problem(15), CFG)
        assert a.as_floats() == b.as_floats()
        assert a.precision_bits == b.precision_bits

    def test_conjugate_symmetry(self):
        for n in (8, 13, 30):
            rs = solve(fib_problem(n), CFG)
            pts = rs.as_floats()
            for x, y in pts:
                partner = min(
                    abs(x - u) + abs(y + v) for u, v in pts
                )
                assert partner <= 1e-9 * max(1.0, abs(x) + abs(y))

    def test_vieta(self):
        for n in (5, 20, 60):
            rs = solve(fib_problem(n), CFG)
            with gmpy2.context(precision=rs.precision_bits):
                total = sum(rs.roots, gmpy2.mpc(0))
                prod = gmpy2.mpc(1)
                for z in rs.roots:
                    prod *= z
                coeffs = fib_problem(n).shifted.coeffs
                scale = sum(abs(z) for z in rs.roots)
                assert abs(total) <= 1e-9 * max(1, scale)
                target = gmpy2.mpfr((-1) ** n * coeffs[0]) / gmpy2.mpfr(coeffs[-1])
                assert abs(prod - target) <= 1e-9 * abs(target)

    def test_residual_invariant(self):
        for n in (10, 50):
            problem = fib_problem(n)
            rs = solve(problem, CFG)
            assert rs.residual_bound <= CFG.tolerance
            with gmpy2.context(precision=2 * rs.precision_bits):
                for z in rs.roots:
                    p = gmpy2.mpc(0)
                    for c in reversed(problem.shifted.coeffs):
                        p = p * z + c
                    m = max(gmpy2.mpfr(1), abs(z))
                    scale = max(
                        abs(gmpy2.mpfr(c)) * m**k
                        for k, c in enumerate(problem.shifted.coeffs)
                    )
                    # slack factor covers the re-evaluation rounding
                    assert abs(p) <= 2 * max(rs.residual_bound, 1e-30) * scale

    def test_zero_shift_matches_cosine_roots(self):
        for n in (1, 2, 3, 17, 60):
            rs = solve(ShiftedProblem.for_path(n, 0), CFG)
            expected = [float(v) for v in path_zero_roots(n, 64)]
            xs = [x for x, _ in rs.as_floats()]
            assert xs == pytest.approx(expected, abs=1e-10)
            assert all(abs(y) < 1e-10 for _, y in rs.as_floats())


class TestPathZeroRoots:
    def test_examples(self):
        assert [float(v) for v in path_zero_roots(1)] == pytest.approx([0.0], abs=1e-15)
        assert [float(v) for v in path_zero_roots(2)] == pytest.approx([-1.0, 1.0])
        assert [float(v) for v in path_zero_roots(3)] == pytest.approx(
            [-math.sqrt(2), 0.0, math.sqrt(2)], abs=1e-15
        )

    def test_sorted_and_sized(self):
        vals = [float(v) for v in path_zero_roots(25)]
        assert len(vals) == 25
        assert vals == sorted(vals)


class TestRealRootCount:
    def test_pell_examples(self):
        assert real_root_count_exact(ShiftedProblem.for_path(2, 5)) == (2, 1)
        assert real_root_count_exact(ShiftedProblem.for_path(2, -5)) == (0, 0)
        count, neg = real_root_count_exact(ShiftedProblem.for_path(3, 12))
        assert (count, neg) == (1, 1)

    def test_zero_shift_counts_all_eigenvalues(self):
        # f_n(λ) = 0 has n distinct symmetric real roots, half negative,
        # and a zero root exactly when n is odd
        for n in (1, 2, 3, 8, 15):
            count, neg = real_root_count_exact(ShiftedProblem.for_path(n, 0))
            assert count == n
            assert neg == n // 2

    def test_constant_rejected(self):
        with pytest.raises(DegreeZero):
            real_root_count_exact(ShiftedProblem(n=1, c=0, shifted=IntPolynomial((3,))))

    def test_agrees_with_solver_classification(self):
        for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15, 20, 30, 45, 60):
            for c in {0, fibonacci(n + 1), -fibonacci(n + 1), pell(n + 1), -pell(n + 1)}:
                problem = ShiftedProblem.for_path(n, c)
                exact_count, _ = real_root_count_exact(problem)
                rs = solve(problem, CFG)
                numeric = sum(1 for _, y in rs.as_floats() if abs(y) < 1e-9)
                assert numeric == exact_count, (n, c)
