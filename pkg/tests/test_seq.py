import pytest

from pathroots.seq import binomial, fib_binomial_identity_check, fibonacci, pell


def test_fibonacci_seed_and_known_values():
    assert fibonacci(0) == 0
    assert fibonacci(1) == 1
    assert fibonacci(14) == 377


def test_pell_seed_and_known_values():
    assert pell(0) == 0
    assert pell(1) == 1
    assert pell(5) == 29


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        fibonacci(-1)
    with pytest.raises(ValueError):
        pell(-1)


def test_binomial_examples():
    assert binomial(0, 0) == 1
    assert binomial(3, 1) == 3
    assert binomial(6, 3) == 20
    assert binomial(2, 5) == 0


def test_recurrences_exact_to_5000():
    fibs = [fibonacci(n) for n in range(5001)]
    pells = [pell(n) for n in range(5001)]
    for n in range(2, 5001):
        assert fibs[n] == fibs[n - 1] + fibs[n - 2]
        assert pells[n] == 2 * pells[n - 1] + pells[n - 2]


def test_binomial_matches_pascal_triangle_to_300():
    # independent oracle: build the triangle additively
    row = [1]
    for n in range(1, 301):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        for k in range(0, n + 1, max(1, n // 7)):
            assert binomial(n, k) == row[k]


def test_fib_binomial_identity_small_cases_by_hand():
    r0 = fib_binomial_identity_check(0)
    assert r0.passed and r0.witnesses["sum"] == 1
    r1 = fib_binomial_identity_check(1)
    assert r1.passed and r1.witnesses["sum"] == 1 + 3 + 1 == 5
    r2 = fib_binomial_identity_check(2)
    assert r2.passed and r2.witnesses["sum"] == 1 + 7 + 15 + 10 + 1 == 34


def test_fib_binomial_identity_to_500():
    assert all(fib_binomial_identity_check(k).passed for k in range(501))
