"""Complex polynomials, the Lehmer polynomial and its roots.

Roots are found by simultaneous Aberth-Ehrlich iteration followed by a few
Newton polishing steps.  Root order carries no meaning.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegeneratePolynomialError, MultipleRootError, SolverError

DEFAULT_TOL = 1e-12
MULTIPLICITY_TOL = 1e-8
POLISH_STEPS = 5
MAX_ITER = 500
# fixed irrational angular offset for the initial circle
_ANGLE_OFFSET = 0.4 * (math.sqrt(5.0) - 1.0)


@dataclass(frozen=True)
class ComplexPolynomial:
    """Polynomial c0 + c1*x + ... + cd*x**d with complex coefficients."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 2:
            raise DegeneratePolynomialError("polynomial must have degree >= 1")
        if abs(coeffs[-1]) == 0.0:
            raise DegeneratePolynomialError("leading coefficient vanishes")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: complex) -> complex:
        return eval_poly(self, x)

    def derivative(self) -> ComplexPolynomial:
        c = self.coefficients
        if len(c) == 2:
            raise DegeneratePolynomialError("derivative of a linear polynomial is constant")
        return ComplexPolynomial(tuple(i * c[i] for i in range(1, len(c))))

    def conjugate(self) -> ComplexPolynomial:
        return ComplexPolynomial(tuple(c.conjugate() for c in self.coefficients))

    def scale(self) -> float:
        return max(abs(c) for c in self.coefficients)


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residual_per_root: tuple[float, ...]
    newton_step_per_root: tuple[float, ...]
    min_pairwise_separation: float
    near_multiple: bool
    iterations: int

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def lehmer_polynomial(s: int, z: complex) -> ComplexPolynomial:
    """Return H(X) = 1 - z*X**(s-1) + z*X**s as a coefficient list."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    z = complex(z)
    if z == 0:
        raise DegeneratePolynomialError("z = 0 gives the constant polynomial 1; the series is trivially 0")
    coeffs = [0j] * (s + 1)
    coeffs[0] += 1
    coeffs[s - 1] += -z
    coeffs[s] += z
    return ComplexPolynomial(tuple(coeffs))


def eval_poly(poly: ComplexPolynomial, x: complex) -> complex:
    acc = 0j
    for c in reversed(poly.coefficients):
        acc = acc * x + c
    return acc


def eval_derivative(poly: ComplexPolynomial, x: complex) -> complex:
    return _horner2(poly.coefficients, x)[1]


def _horner2(coeffs: Sequence[complex], x: complex) -> tuple[complex, complex]:
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * x + p
        p = p * x + c
    return p, dp


def _initial_guesses(coeffs: Sequence[complex]) -> list[complex]:
    d = len(coeffs) - 1
    lead = coeffs[-1]
    r = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
    return [r * cmath.exp(1j * (2.0 * math.pi * j / d + _ANGLE_OFFSET)) for j in range(d)]


def _min_separation(roots: Sequence[complex]) -> tuple[float, bool]:
    sep = math.inf
    flagged = False
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            dist = abs(roots[i] - roots[j])
            sep = min(sep, dist)
            if dist < MULTIPLICITY_TOL * (1.0 + max(abs(roots[i]), abs(roots[j]))):
                flagged = True
    return sep, flagged


def find_roots(poly: ComplexPolynomial, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> RootSet:
    """All roots of ``poly`` with residual and separation diagnostics.

    Raises SolverError when the Aberth iteration stalls or a polished root
    still has residual above ``tol * (1 + max|c_i|)``.
    """
    coeffs = poly.coefficients
    d = poly.degree
    if d == 1:
        roots = [-coeffs[0] / coeffs[1]]
        iterations = 0
    else:
        roots = _initial_guesses(coeffs)
        converged = False
        iterations = 0
        max_step = math.inf
        for iterations in range(1, max_iter + 1):
            max_step = 0.0
            for i in range(d):
                zi = roots[i]
                p, dp = _horner2(coeffs, zi)
                if p == 0:
                    continue
                if dp == 0:
                    # nudge off a critical point
                    roots[i] = zi + 1e-3 * (1.0 + abs(zi))
                    max_step = math.inf
                    continue
                ratio = p / dp
                repulsion = sum(1.0 / (zi - roots[j]) for j in range(d) if j != i)
                w = ratio / (1.0 - ratio * repulsion)
                roots[i] = zi - w
                max_step = max(max_step, abs(w) / (1.0 + abs(zi)))
            if max_step < 1e-14:
                converged = True
                break
        if not converged and max_step > 1e-8:
            raise SolverError(
                f"Aberth iteration did not converge in {max_iter} iterations (last relative step {max_step:.3g})",
                roots=tuple(roots),
                max_step=max_step,
            )

    steps = []
    for i, rho in enumerate(roots):
        step = 0.0
        p, dp = _horner2(coeffs, rho)
        for _ in range(POLISH_STEPS):
            if p == 0 or dp == 0:
                step = 0.0
                break
            delta = p / dp
            candidate = rho - delta
            pc, dpc = _horner2(coeffs, candidate)
            step = abs(delta)
            if abs(pc) > abs(p):
                break
            rho, p, dp = candidate, pc, dpc
            if step < 1e-13 * (1.0 + abs(rho)):
                break
        roots[i] = rho
        steps.append(abs(p / dp) if dp != 0 else 0.0)

    residuals = tuple(abs(eval_poly(poly, r)) for r in roots)
    bound = tol * (1.0 + poly.scale())
    worst = max(residuals)
    if worst > bound:
        raise SolverError(
            f"root residual {worst:.3g} exceeds tolerance {bound:.3g}",
            roots=tuple(roots),
            max_step=max(steps),
        )
    sep, flagged = _min_separation(roots) if d > 1 else (math.inf, False)
    return RootSet(
        roots=tuple(roots),
        residual_per_root=residuals,
        newton_step_per_root=tuple(steps),
        min_pairwise_separation=sep,
        near_multiple=flagged,
        iterations=iterations,
    )


def residues(poly: ComplexPolynomial, roots: RootSet | None = None, tol: float = 1e-12) -> list[tuple[complex, complex]]:
    """Partial fractions of 1/H: pairs (rho, 1/H'(rho)) over the simple roots."""
    if roots is None:
        roots = find_roots(poly)
    if roots.near_multiple:
        raise MultipleRootError(
            f"roots separated by only {roots.min_pairwise_separation:.3g}; partial fractions need simple roots"
        )
    out = []
    floor = tol * poly.scale()
    for rho in roots.roots:
        dh = eval_derivative(poly, rho)
        if abs(dh) <= floor * (1.0 + abs(rho)) ** (poly.degree - 1):
            raise MultipleRootError(f"|H'(rho)| = {abs(dh):.3g} at rho = {rho}")
        out.append((rho, 1.0 / dh))
    return out
