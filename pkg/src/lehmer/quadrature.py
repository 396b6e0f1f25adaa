"""Adaptive Gauss-Kronrod quadrature and the two integral representations.

``lehmer_integral(s, z)`` is the integral of 1/(1 - z t**(s-1) + z t**s) over
[0, 1].  Expanding it term by term gives the series *including* its m = 0
term, so it equals ``1 + A_s(z)``, not ``A_s(z)``.

``weighted_integral(s, k, x)`` integrates Li(-k, x (1-t) t**(s-1)) and equals
the n**k-weighted series for k >= 1.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .polylog import polylog_neg
from .series import radius

DEFAULT_TOL = 1e-12
MAX_PANELS = 2000
POLE_TOL = 1e-8
_DOMAIN_SAMPLES = 512

# 15-point Kronrod abscissae on [-1, 1] (non-negative half) with the weights of
# the embedded 7-point Gauss rule at every other node.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    subdivisions: int
    converged: bool


def gauss_kronrod_15(f: Callable, a: float, b: float) -> tuple[complex, float]:
    """Kronrod-15 estimate on [a, b] and |K15 - G7| as its error."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fc = f(mid)
    kronrod = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        fsum = f(mid - dx) + f(mid + dx)
        kronrod += _WGK[j] * fsum
        if j % 2 == 1:
            gauss += _WG[j // 2] * fsum
    return kronrod * half, abs((kronrod - gauss) * half)


def integrate(f: Callable, a: float, b: float, tol: float = DEFAULT_TOL, max_panels: int = MAX_PANELS) -> QuadratureResult:
    """Adaptive bisection of the panel with the largest error estimate."""
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    value, err = gauss_kronrod_15(f, a, b)
    heap = [(-err, a, b, value)]
    total_err = err
    panels = 1
    while total_err > tol and panels < max_panels:
        neg_err, lo, hi, _ = heapq.heappop(heap)
        m = 0.5 * (lo + hi)
        if not lo < m < hi:
            heapq.heappush(heap, (neg_err, lo, hi, _))
            break
        v1, e1 = gauss_kronrod_15(f, lo, m)
        v2, e2 = gauss_kronrod_15(f, m, hi)
        heapq.heappush(heap, (-e1, lo, m, v1))
        heapq.heappush(heap, (-e2, m, hi, v2))
        panels += 1
        # re-add from scratch to keep the sum free of cancellation drift
        total_err = math.fsum(-e for e, *_ in heap)
    values = [v for *_, v in heap]
    if any(isinstance(v, complex) for v in values):
        value = complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    else:
        value = math.fsum(values)
    return QuadratureResult(value, total_err, panels, total_err <= tol)


def _profile(s: int, t: float) -> float:
    """(1 - t) t**(s-1), the kernel that multiplies z in both integrands."""
    return (1.0 - t) * t ** (s - 1)


def check_integrable(s: int, z: complex, pole_tol: float = POLE_TOL) -> None:
    """Raise DomainError if 1 - z (1-t) t**(s-1) vanishes on or near [0, 1]."""
    if z == 0:
        return
    t_peak = (s - 1) / s
    candidates = [t_peak] + [i / _DOMAIN_SAMPLES for i in range(_DOMAIN_SAMPLES + 1)]
    worst_t = min(candidates, key=lambda t: abs(1 - z * _profile(s, t)))
    gap = abs(1 - z * _profile(s, worst_t))
    if gap < pole_tol:
        R = radius(s)
        raise DomainError(
            f"integrand has a pole near t = {worst_t:.6g} (|denominator| = {gap:.3g}); "
            f"real z must stay below R_{s} = {R:.15g}"
        )
    if not isinstance(z, complex) or z.imag == 0:
        R = radius(s)
        if complex(z).real >= R:
            raise DomainError(
                f"z = {complex(z).real:.15g} >= R_{s} = {R:.15g}: the denominator vanishes on [0, 1]"
            )


def lehmer_integral(s: int, z: complex, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Integral of 1/(1 - z t**(s-1) + z t**s) over [0, 1]; equals 1 + A_s(z)."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    check_integrable(s, z)
    return integrate(lambda t: 1.0 / (1.0 - z * _profile(s, t)), 0.0, 1.0, tol)


def weighted_integral(s: int, k: int, x: complex, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Integral of Li(-k, x (1-t) t**(s-1)) over [0, 1], for k >= 1."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if k < 1:
        raise ValueError("weighted_integral needs k >= 1; use lehmer_integral - 1 for k = 0")
    check_integrable(s, x)
    return integrate(lambda t: polylog_neg(k, x * _profile(s, t)), 0.0, 1.0, tol)
