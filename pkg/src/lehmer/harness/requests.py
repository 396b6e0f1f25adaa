"""Evaluation requests: the two sides of an identity.

Every request evaluates to a primary value plus a mapping of named pipelines
to the values each independent method produced.  The primary value is the
first pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..closedform import euler_apply, root_expression_sum, root_sum, MAX_JET_ORDER
from ..errors import LehmerError
from ..polyroots import ComplexPolynomial
from ..quadrature import lehmer_integral, weighted_integral
from ..series import SeriesSpec, sum_direct
from .expr import const_value


@dataclass
class Evaluation:
    value: complex
    pipelines: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def spread(self) -> float:
        vals = list(self.pipelines.values())
        if len(vals) < 2:
            return 0.0
        return max(abs(a - b) for a in vals for b in vals)


def parse_number(text) -> complex:
    """'1/2', '-3', '0.25' -> float; complex values pass through."""
    if isinstance(text, (int, float, complex, Fraction)):
        return text if isinstance(text, complex) else float(text)
    return float(Fraction(text))


@dataclass(frozen=True)
class SeriesRequest:
    """scale * sum_{n>=start} n**k z**n / ((sn+1) C(sn, n))."""

    s: int
    k: int
    z: str
    start: int = 1
    scale: str = "1"

    def describe(self) -> str:
        prefix = "" if self.scale == "1" else f"{self.scale}*"
        return f"{prefix}sum_{{n>={self.start}}} n^{self.k} ({self.z})^n/(({self.s}n+1)C({self.s}n,n))"

    def evaluate(self) -> Evaluation:
        z = parse_number(self.z)
        scale = const_value(self.scale)
        spec = SeriesSpec(self.s, self.k, z, self.start)
        ev = Evaluation(0.0)
        ev.pipelines["series"] = scale * sum_direct(spec).value
        ev.value = ev.pipelines["series"]
        offset = spec.zero_term
        try:
            if self.k >= 1:
                ev.pipelines["integral"] = scale * weighted_integral(self.s, self.k, z).value
            else:
                ev.pipelines["integral"] = scale * (lehmer_integral(self.s, z).value - 1 + offset)
        except LehmerError as exc:
            ev.notes.append(f"integral skipped: {exc}")
        if z == 0:
            ev.notes.append("root-sum skipped: z = 0")
        elif self.k > MAX_JET_ORDER:
            ev.notes.append(f"root-sum skipped: k > {MAX_JET_ORDER}")
        else:
            try:
                if self.k >= 1:
                    ev.pipelines["rootsum"] = scale * euler_apply(self.s, z, self.k)
                else:
                    ev.pipelines["rootsum"] = scale * (root_sum(self.s, z) - 1 + offset)
            except LehmerError as exc:
                ev.notes.append(f"root-sum skipped: {exc}")
        return ev


@dataclass(frozen=True)
class IntegralRequest:
    """Integral of 1/(1 - z t**(s-1) + z t**s) over [0, 1]."""

    s: int
    z: str

    def describe(self) -> str:
        return f"int_0^1 dt/(1-({self.z})t^{self.s - 1}+({self.z})t^{self.s})"

    def evaluate(self) -> Evaluation:
        z = parse_number(self.z)
        ev = Evaluation(lehmer_integral(self.s, z).value)
        ev.pipelines["integral"] = ev.value
        ev.pipelines["rootsum"] = root_sum(self.s, z)
        return ev


@dataclass(frozen=True)
class RootSumRequest:
    """(1/z) sum_rho (Log(1-rho) - Log(-rho)) / (rho**(s-2) (1-s+s rho)), raw."""

    s: int
    z: str

    def describe(self) -> str:
        return f"(1/z) sum_rho [log(1-rho)-log(-rho)]/(rho^{self.s - 2}(1-{self.s}+{self.s}rho)), z={self.z}"

    def evaluate(self) -> Evaluation:
        z = parse_number(self.z)
        ev = Evaluation(root_sum(self.s, z))
        ev.pipelines["rootsum"] = ev.value
        ev.pipelines["integral"] = lehmer_integral(self.s, z).value
        return ev


@dataclass(frozen=True)
class ConstRequest:
    text: str

    def describe(self) -> str:
        return self.text

    def evaluate(self) -> Evaluation:
        value = const_value(self.text)
        return Evaluation(value, {"closed_form": value})


@dataclass(frozen=True)
class HypergeometricRequest:
    """scale * pFq(upper; lower; x) summed by its term-ratio recurrence.

    ``equivalent`` optionally names a Lehmer series with the same value so the
    record gets independent pipelines.
    """

    upper: tuple
    lower: tuple
    x: str
    scale: str = "1"
    equivalent: Optional[SeriesRequest] = None
    tol: float = 1e-17
    max_terms: int = 10_000

    def describe(self) -> str:
        up = ",".join(self.upper)
        lo = ",".join(self.lower)
        prefix = "" if self.scale == "1" else f"{self.scale}*"
        return f"{prefix}{len(self.upper)}F{len(self.lower)}[{up};{lo};{self.x}]"

    def term_ratio_sum(self) -> float:
        a = [float(Fraction(u)) for u in self.upper]
        b = [float(Fraction(v)) for v in self.lower]
        x = float(Fraction(self.x))
        terms = [1.0]
        t = 1.0
        for m in range(self.max_terms):
            ratio = x / (m + 1)
            for ai in a:
                ratio *= m + ai
            for bi in b:
                ratio /= m + bi
            t *= ratio
            terms.append(t)
            if t == 0 or (abs(ratio) < 0.5 and abs(t) < self.tol * abs(math.fsum(terms))):
                return math.fsum(terms)
        raise LehmerError(f"term-ratio series did not converge in {self.max_terms} terms")

    def evaluate(self) -> Evaluation:
        value = const_value(self.scale) * self.term_ratio_sum()
        ev = Evaluation(value, {"term_ratio": value})
        if self.equivalent is not None:
            other = self.equivalent.evaluate()
            ev.pipelines.update(other.pipelines)
            ev.notes.extend(other.notes)
        return ev


@dataclass(frozen=True)
class RootExpressionRequest:
    """constant + scale * sum_{rho: H(rho)=0} p(rho) (Log(1-rho) - Log(-rho)) / q(rho)."""

    poly: tuple
    numerator: tuple
    denominator: tuple
    constant: str = "0"
    scale: str = "1"

    def describe(self) -> str:
        def fmt(c: Sequence[int]) -> str:
            return " + ".join(f"({v})X^{i}" for i, v in enumerate(c) if v)

        return (
            f"{self.constant} + {self.scale}*sum_{{rho: {fmt(self.poly)} = 0}} "
            f"[{fmt(self.numerator)}][log(1-rho)-log(-rho)]/[{fmt(self.denominator)}]"
        )

    def evaluate(self) -> Evaluation:
        total = root_expression_sum(ComplexPolynomial(self.poly), self.numerator, self.denominator)
        value = const_value(self.constant) + const_value(self.scale) * total
        if abs(value.imag) <= 1e-12 * max(1.0, abs(value)):
            value = value.real
        return Evaluation(value, {"root_expression": value})
