"""Root-sum closed form and its derivatives in z.

For the simple roots rho of H(X) = 1 - z X**(s-1) + z X**s,

    (1/z) * sum_rho (Log(1 - rho) - Log(-rho)) / (rho**(s-2) (1 - s + s rho))

is the integral of 1/H(t) over [0, 1], i.e. ``1 + A_s(z)``: the series with
its m = 0 term.  ``root_sum`` returns this raw value and ``root_sum_series``
subtracts the 1.  Principal logarithms are only correct when no root lies on
the segment [0, 1]; such inputs are refused.

Weighted series are produced by pushing the whole expression through
truncated Taylor jets in z and applying (z d/dz)**k.
"""

from __future__ import annotations

import cmath
import logging
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import BranchSafetyError, MultipleRootError, PoleError
from .polyroots import ComplexPolynomial, RootSet, find_roots, lehmer_polynomial

logger = logging.getLogger(__name__)

BRANCH_BAND = 1e-9
JET_TOL = 1e-14
MAX_JET_ORDER = 8
REALITY_TOL = 1e-10


class Jet:
    """Truncated Taylor series a0 + a1 d + ... + aK d**K."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        self.coeffs = tuple(complex(c) for c in coeffs)

    @classmethod
    def constant(cls, value: complex, order: int) -> Jet:
        return cls([value] + [0j] * order)

    @classmethod
    def variable(cls, value: complex, order: int) -> Jet:
        if order == 0:
            return cls([value])
        return cls([value, 1.0] + [0j] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"Jet({list(self.coeffs)!r})"

    def __getitem__(self, i):
        return self.coeffs[i]

    def _lift(self, other) -> Jet:
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError(f"jet orders differ: {self.order} vs {other.order}")
            return other
        return Jet.constant(other, self.order)

    def __add__(self, other):
        other = self._lift(other)
        return Jet([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet([a * other for a in self.coeffs])
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        return Jet([sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(len(a))])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet([a / other for a in self.coeffs])
        other = self._lift(other)
        b = other.coeffs
        if abs(b[0]) <= JET_TOL * max(1.0, max(abs(c) for c in b)):
            raise ZeroDivisionError(f"jet division by a series with leading coefficient {b[0]}")
        a = self.coeffs
        c: list[complex] = []
        for n in range(len(a)):
            acc = a[n] - sum(b[i] * c[n - i] for i in range(1, n + 1))
            c.append(acc / b[0])
        return Jet(c)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("jets support integer powers only")
        if n < 0:
            return 1.0 / (self ** (-n))
        result = Jet.constant(1.0, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def log(self) -> Jet:
        """Principal Log at the base point, exact higher coefficients."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("log of a jet with zero leading coefficient")
        out = [cmath.log(a[0])]
        for n in range(1, len(a)):
            acc = n * a[n] - sum(a[i] * (n - i) * out[n - i] for i in range(1, n))
            out.append(acc / (n * a[0]))
        return Jet(out)


@dataclass(frozen=True)
class RootSumTerm:
    root: complex
    logdiff: complex
    denom: complex

    @property
    def value(self) -> complex:
        return self.logdiff / self.denom


def logdiff(rho: complex) -> complex:
    """Log(1 - rho) - Log(-rho) with principal branches."""
    rho = complex(rho)
    # subtract rather than negate: -(x+0j) carries a -0.0 imaginary part,
    # which would put Log(-rho) on the other side of the cut from Log(1 - rho)
    return cmath.log(1 - rho) - cmath.log(0j - rho)


def _on_unit_segment(rho: complex, band: float = BRANCH_BAND) -> bool:
    return abs(rho.imag) <= band and -band <= rho.real <= 1.0 + band


def _check_roots(roots: RootSet, band: float = BRANCH_BAND) -> None:
    if roots.near_multiple:
        raise MultipleRootError(
            f"roots within {roots.min_pairwise_separation:.3g} of each other; the root-sum formula needs simple roots"
        )
    for rho in roots.roots:
        if _on_unit_segment(rho, band):
            raise BranchSafetyError(
                f"root {rho} lies on [0, 1]: the integrand has a pole there and principal logarithms are not valid"
            )


def lehmer_roots(s: int, z: complex) -> RootSet:
    roots = find_roots(lehmer_polynomial(s, z))
    _check_roots(roots)
    return roots


def root_sum_terms(s: int, z: complex) -> list[RootSumTerm]:
    roots = lehmer_roots(s, z)
    terms = []
    for rho in roots.roots:
        denom = rho ** (s - 2) * (1 - s + s * rho)
        if abs(denom) < 1e-8 * (1.0 + abs(rho)) ** max(s - 1, 0):
            raise MultipleRootError(f"H'(rho)/z = {denom} is numerically zero at rho = {rho}")
        terms.append(RootSumTerm(rho, logdiff(rho), denom))
    return terms


def _realify(value: complex, z: complex, what: str):
    if isinstance(z, complex) and z.imag != 0:
        return value
    scale = max(1.0, abs(value))
    logger.debug("%s: discarding imaginary part %.3g", what, value.imag)
    if abs(value.imag) > REALITY_TOL * scale:
        warnings.warn(f"{what}: imaginary part {value.imag:.3g} exceeds {REALITY_TOL:g} for real z", RuntimeWarning)
    return value.real


def root_sum(s: int, z: complex) -> complex:
    """Raw root-sum closed form; equals 1 + A_s(z) (the m >= 0 series).

    Returns a float for real z once the imaginary residue is checked.
    """
    if z == 0:
        raise PoleError("root sum is undefined at z = 0")
    total = sum(t.value for t in root_sum_terms(s, z)) / z
    return _realify(complex(total), z, f"root_sum(s={s}, z={z})")


def root_sum_series(s: int, z: complex) -> complex:
    """A_s(z) = sum_{m>=1} z**m / ((sm+1) C(sm, m)) from the root sum."""
    return root_sum(s, z) - 1


def _lehmer_value_and_slope(rho: Jet, zj: Jet, s: int) -> tuple[Jet, Jet]:
    hi = rho ** (s - 1)
    value = 1 - zj * hi + zj * hi * rho
    if s == 1:
        slope = zj
    else:
        slope = zj * rho ** (s - 2) * (s * rho - (s - 1))
    return value, slope


def root_jets(s: int, z: complex, order: int) -> list[Jet]:
    """Taylor expansions of every root rho(z + d) of H(X; z + d) = 0."""
    if not 0 <= order <= MAX_JET_ORDER:
        raise ValueError(f"jet order must be in 0..{MAX_JET_ORDER}, got {order}")
    roots = lehmer_roots(s, z)
    zj = Jet.variable(z, order)
    jets = []
    for rho0 in roots.roots:
        rho = Jet.constant(rho0, order)
        # each Newton step in jet arithmetic fixes at least one more coefficient
        for _ in range(order + 1):
            value, slope = _lehmer_value_and_slope(rho, zj, s)
            # the base point is already a root; pin it to stay exactly on it
            step = Jet([0j] + list(value.coeffs[1:])) / slope
            rho = rho - step
        jets.append(rho)
    return jets


def root_derivative(s: int, z: complex, rho: complex) -> complex:
    """d rho / dz = (rho**(s-1) - rho**s) / H'(rho) by implicit differentiation."""
    dh = z * rho ** (s - 2) * (1 - s + s * rho)
    return (rho ** (s - 1) - rho**s) / dh


@lru_cache(maxsize=None)
def stirling2(n: int, j: int) -> int:
    if n == j:
        return 1
    if j == 0 or j > n:
        return 0
    return j * stirling2(n - 1, j) + stirling2(n - 1, j - 1)


def root_sum_jet(s: int, z: complex, order: int) -> Jet:
    """Taylor coefficients of the raw root sum around z."""
    zj = Jet.variable(z, order)
    total = Jet.constant(0.0, order)
    for rho in root_jets(s, z, order):
        ld = (1 - rho).log() - (0 - rho).log()
        denom = rho ** (s - 2) * (1 - s + s * rho)
        total = total + ld / denom
    return total / zj


def euler_apply(s: int, z: complex, k: int) -> complex:
    """(z d/dz)**k of the root sum: sum_{n>=1} n**k z**n / ((sn+1) C(sn, n))."""
    if not 1 <= k <= MAX_JET_ORDER:
        raise ValueError(f"k must be in 1..{MAX_JET_ORDER}, got {k}")
    if z == 0:
        raise PoleError("root sum is undefined at z = 0")
    jet = root_sum_jet(s, z, k)
    total = 0j
    for j in range(1, k + 1):
        total += stirling2(k, j) * z**j * math.factorial(j) * jet[j]
    return _realify(complex(total), z, f"euler_apply(s={s}, z={z}, k={k})")


def root_expression_sum(
    poly: ComplexPolynomial,
    numerator: Sequence[complex],
    denominator: Sequence[complex],
    roots: RootSet | None = None,
) -> complex:
    """Sum over roots of p(rho) (Log(1-rho) - Log(-rho)) / q(rho).

    ``numerator`` and ``denominator`` are ascending coefficient lists.
    """
    if roots is None:
        roots = find_roots(poly)
    _check_roots(roots)
    if not any(numerator):
        return 0j
    total = 0j
    q_scale = max(abs(c) for c in denominator)
    for rho in roots.roots:
        pv = _horner(numerator, rho)
        qv = _horner(denominator, rho)
        if abs(qv) <= 1e-12 * q_scale * (1.0 + abs(rho)) ** (len(denominator) - 1):
            raise PoleError(f"denominator vanishes at root {rho}")
        total += pv * logdiff(rho) / qv
    return total


def _horner(coeffs: Sequence[complex], x: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
