import math
import random
import threading
from fractions import Fraction

import pytest

from lehmer.errors import CapacityError, PoleError
from lehmer.polylog import eulerian_row, polylog_neg


def truncated_series(k, x, terms=200):
    return sum(n**k * x**n for n in range(1, terms + 1))


def permutation_descents(n):
    # brute-force oracle: count permutations of n by number of descents
    from itertools import permutations

    counts = [0] * n
    for p in permutations(range(n)):
        counts[sum(p[i] > p[i + 1] for i in range(n - 1))] += 1
    return counts


def test_rows():
    assert eulerian_row(1) == (1,)
    assert eulerian_row(3) == (1, 4, 1)
    assert eulerian_row(4) == (1, 11, 11, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_rows_count_descents(n):
    assert list(eulerian_row(n)) == permutation_descents(n)


@pytest.mark.parametrize("n", range(1, 65))
def test_triangle_invariants(n):
    row = eulerian_row(n)
    assert len(row) == n
    assert row[0] == row[-1] == 1
    assert row == tuple(reversed(row))
    assert sum(row) == math.factorial(n)
    assert all(isinstance(a, int) for a in row)


def test_capacity():
    with pytest.raises(CapacityError):
        eulerian_row(65)
    assert len(eulerian_row(80, max_n=100)) == 80


def test_concurrent_construction_is_consistent():
    results = []

    def work(n):
        results.append((n, eulerian_row(n, max_n=120)))

    threads = [threading.Thread(target=work, args=(n,)) for n in range(90, 120)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for n, row in results:
        assert sum(row) == math.factorial(n)


def test_examples():
    assert polylog_neg(0, 0.5) == pytest.approx(1)
    assert polylog_neg(1, 0.5) == pytest.approx(2)
    assert truncated_series(1, 0.5) == pytest.approx(2)
    assert polylog_neg(2, -1) == 0


def test_pole():
    with pytest.raises(PoleError):
        polylog_neg(3, 1.0)
    with pytest.raises(PoleError):
        polylog_neg(1, 1 + 1e-12j)


def exact_truncated_series(k, a, b, q, terms=200):
    """sum_{n<=terms} n**k x**n for x = (a + bi)/q in exact Gaussian rationals."""
    pr, pi = Fraction(1), Fraction(0)
    xr, xi = Fraction(a, q), Fraction(b, q)
    sr = si = Fraction(0)
    for n in range(1, terms + 1):
        pr, pi = pr * xr - pi * xi, pr * xi + pi * xr
        sr += n**k * pr
        si += n**k * pi
    return complex(float(sr), float(si))


def sample_points(count=64, q=32, seed=7):
    rng = random.Random(seed)
    pts = set()
    while len(pts) < count:
        a, b = rng.randint(-q // 2, q // 2), rng.randint(-q // 2, q // 2)
        if a * a + b * b <= (q // 2) ** 2:
            pts.add((a, b))
    return sorted(pts)


@pytest.mark.parametrize("k", range(0, 9))
def test_against_truncated_series(k):
    # |x| <= 1/2 lets Li(-8, x) reach ~1e6, so the bound is relative to max(1, |value|)
    for a, b in sample_points():
        oracle = exact_truncated_series(k, a, b, 32)
        assert abs(polylog_neg(k, complex(a, b) / 32) - oracle) < 1e-12 * max(1.0, abs(oracle))


def test_float_series_agrees_where_values_are_small():
    for a, b in sample_points(seed=3):
        x = complex(a, b) / 32
        assert abs(polylog_neg(2, x) - truncated_series(2, x)) < 1e-12


@pytest.mark.parametrize("k", range(0, 9))
def test_conjugate_symmetry(k):
    x = 0.3 - 2.1j
    assert polylog_neg(k, x.conjugate()) == pytest.approx(polylog_neg(k, x).conjugate(), rel=1e-14)
