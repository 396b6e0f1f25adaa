"""Evaluation and verification of Lehmer binomial series.

The series ``sum n**k * z**n / ((s*n + 1) * C(s*n, n))`` is computed three
ways: direct summation, integral representations on [0, 1], and a finite sum
over the roots of ``1 - z*X**(s-1) + z*X**s``.
"""

from .errors import (
    BranchSafetyError,
    CapacityError,
    ConvergenceError,
    DegeneratePolynomialError,
    DomainError,
    LehmerError,
    MultipleRootError,
    PoleError,
    SolverError,
)
from .polyroots import ComplexPolynomial, RootSet, find_roots, lehmer_polynomial, residues
from .polylog import eulerian_row, polylog_neg
from .quadrature import QuadratureResult, integrate, lehmer_integral, weighted_integral
from .series import SeriesSpec, SumResult, binomial, radius, sum_direct, sum_exact, term_via_beta
from .closedform import Jet, euler_apply, root_expression_sum, root_jets, root_sum

__all__ = [
    "BranchSafetyError",
    "CapacityError",
    "ComplexPolynomial",
    "ConvergenceError",
    "DegeneratePolynomialError",
    "DomainError",
    "Jet",
    "LehmerError",
    "MultipleRootError",
    "PoleError",
    "QuadratureResult",
    "RootSet",
    "SeriesSpec",
    "SolverError",
    "SumResult",
    "binomial",
    "euler_apply",
    "eulerian_row",
    "find_roots",
    "integrate",
    "lehmer_integral",
    "lehmer_polynomial",
    "polylog_neg",
    "radius",
    "residues",
    "root_expression_sum",
    "root_jets",
    "root_sum",
    "sum_direct",
    "sum_exact",
    "term_via_beta",
    "weighted_integral",
]
