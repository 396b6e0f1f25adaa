"""Direct summation of sum_n n**k z**n / ((s*n + 1) * C(s*n, n)).

Floating-point summation carries a geometric tail majorant; the exact
rational partial sums are used as an oracle by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import CapacityError, ConvergenceError, DomainError

DEFAULT_TOL = 1e-15
MAX_TERMS = 200_000
EXACT_TERM_CAP = 5000


@dataclass(frozen=True)
class SeriesSpec:
    """One series instance.

    ``start = 1`` is the classical Lehmer series A_s(z) when ``k = 0``;
    ``start = 0`` adds the n = 0 term, which is 1 for ``k = 0`` (0**0 = 1)
    and 0 otherwise.
    """

    s: int
    k: int = 0
    z: complex = 0.0
    start: int = 1

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.start not in (0, 1):
            raise ValueError(f"start must be 0 or 1, got {self.start}")

    @property
    def zero_term(self) -> int:
        return 1 if (self.start == 0 and self.k == 0) else 0


@dataclass(frozen=True)
class SumResult:
    value: complex
    truncation_bound: float
    terms_used: int


def binomial(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError(f"binomial arguments must be non-negative, got ({a}, {b})")
    if b > a:
        raise ValueError(f"binomial({a}, {b}) needs b <= a")
    return math.comb(a, b)


def term_via_beta(s: int, m: int) -> Fraction:
    """m! ((s-1)m)! / (sm+1)!, the Beta-integral form of 1/((sm+1) C(sm, m))."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    value = Fraction(math.factorial(m) * math.factorial((s - 1) * m), math.factorial(s * m + 1))
    assert value == Fraction(1, (s * m + 1) * binomial(s * m, m))
    return value


def radius(s: int) -> float:
    """Radius of convergence s**s / (s-1)**(s-1) in z."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if s == 1:
        return 1.0
    return float(Fraction(s**s, (s - 1) ** (s - 1)))


def coefficient_ratio(s: int, n: int) -> Fraction:
    """u(n+1)/u(n) for u(n) = 1/((sn+1) C(sn, n)), exactly."""
    num = n + 1
    for j in range(1, s):
        num *= (s - 1) * n + j
    den = 1
    for j in range(2, s + 2):
        den *= s * n + j
    return Fraction(num, den)


def _fsum(terms):
    if all(isinstance(t, float) for t in terms):
        return math.fsum(terms)
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def sum_direct(spec: SeriesSpec, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SumResult:
    """Sum the series until a geometric tail majorant falls below ``tol``.

    For n >= 1 every later term ratio is bounded by
    ``q(n) = |z|/R * ((n+1)/n)**k``.  Once q(n) <= r* the discarded tail is
    at most ``|t_n| r*/(1 - r*)``, where r* sits a little above |z|/R.
    """
    s, k = spec.s, spec.k
    z = spec.z
    z = float(z) if not isinstance(z, complex) else (z.real if z.imag == 0 else z)
    R = radius(s)
    if z == 0:
        return SumResult(float(spec.zero_term), 0.0, 1 if spec.zero_term else 0)
    rel = abs(z) / R
    if rel >= 1.0:
        raise DomainError(f"|z| = {abs(z):.15g} is outside the convergence disc |z| < R_{s} = {R:.15g}")
    r_star = min(rel + 0.05, 0.5 * (1.0 + rel))

    terms = [float(spec.zero_term) if spec.zero_term else 0.0]
    w = 1.0  # z**n u(n)
    n = 0
    while True:
        w = w * z * float(coefficient_ratio(s, n))
        n += 1
        t = n**k * w
        terms.append(t)
        majorant = rel * ((n + 1) / n) ** k
        if majorant <= r_star:
            bound = abs(t) * r_star / (1.0 - r_star)
            if bound < tol:
                return SumResult(_fsum(terms), bound, n + 1 - spec.start)
        if n >= max_terms:
            raise ConvergenceError(
                f"tail bound did not fall below {tol:g} within {max_terms} terms (|z|/R = {rel:.6g})"
            )


def _as_fraction(z) -> Fraction:
    if isinstance(z, (Rational, str)):
        return Fraction(z)
    if isinstance(z, float):
        return Fraction(z)
    raise TypeError(f"exact summation needs a rational z, got {z!r}")


def sum_exact(spec: SeriesSpec, N: int, cap: int = EXACT_TERM_CAP) -> Fraction:
    """Exact partial sum over indices start..N (the n = 0 term per SeriesSpec)."""
    if N > cap:
        raise CapacityError(f"N = {N} exceeds the exact-summation cap {cap}")
    z = _as_fraction(spec.z)
    total = Fraction(spec.zero_term)
    u = Fraction(1)
    zn = Fraction(1)
    for n in range(N):
        u *= coefficient_ratio(spec.s, n)
        zn *= z
        total += (n + 1) ** spec.k * zn * u
    return total
