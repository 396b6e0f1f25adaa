"""Polylogarithm of non-positive integer order as a rational function.

``polylog_neg(k, x)`` is Li(-k, x) = sum_{n>=1} n**k x**n, whose closed form
has the Eulerian numbers as numerator coefficients.
"""

from __future__ import annotations

import threading

from .errors import CapacityError, PoleError

MAX_EULERIAN_ROW = 64
POLE_TOL = 1e-10

_rows: list[tuple[int, ...]] = [(), (1,)]
_lock = threading.Lock()


def eulerian_row(n: int, max_n: int = MAX_EULERIAN_ROW) -> tuple[int, ...]:
    """Row n of the Eulerian triangle, A(n, 0) .. A(n, n-1), as exact ints."""
    if n < 1:
        raise ValueError(f"Eulerian rows start at n = 1, got {n}")
    if n > max_n:
        raise CapacityError(f"Eulerian row {n} exceeds the configured maximum {max_n}")
    if n < len(_rows):
        return _rows[n]
    with _lock:
        while len(_rows) <= n:
            m = len(_rows)
            prev = _rows[m - 1]
            row = []
            for j in range(m):
                left = prev[j - 1] if j >= 1 else 0
                here = prev[j] if j < len(prev) else 0
                row.append((j + 1) * here + (m - j) * left)
            _rows.append(tuple(row))
    return _rows[n]


def polylog_neg(k: int, x: complex, pole_tol: float = POLE_TOL) -> complex:
    """Li(-k, x) for integer k >= 0 and x away from the pole at 1."""
    if k < 0:
        raise ValueError(f"order index k must be >= 0, got {k}")
    one_minus = 1 - x
    if abs(one_minus) < pole_tol:
        raise PoleError(f"|1 - x| = {abs(one_minus):.3g} is within {pole_tol:g} of the pole at x = 1")
    if k == 0:
        return x / one_minus
    # numerator sum_i A(k, i) x**(k - i), evaluated by Horner in x
    numer = 0
    for a in eulerian_row(k):
        numer = numer * x + a
    numer *= x
    return numer / one_minus ** (k + 1)
