"""Identity records, their verification, and consistency sweeps."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Union

from ..closedform import MAX_JET_ORDER, euler_apply, root_sum
from ..errors import LehmerError
from ..quadrature import lehmer_integral, weighted_integral
from ..series import MAX_TERMS, SeriesSpec, radius, sum_direct
from .expr import parse_const_expr
from .requests import ConstRequest, Evaluation

CONFIRMED = "CONFIRMED"
ERRATUM = "ERRATUM"
UNRESOLVED = "UNRESOLVED"
STATUSES = (CONFIRMED, ERRATUM, UNRESOLVED)

# lhs pipelines must agree within this multiple of the record tolerance
PIPELINE_FACTOR = 10.0


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs: object
    rhs: Union[str, object]
    source: str
    tolerance: float
    expected_status: str
    note: str = ""

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"record {self.id}: tolerance must be positive")
        if self.expected_status not in STATUSES:
            raise ValueError(f"record {self.id}: unknown status {self.expected_status!r}")
        if isinstance(self.rhs, str):
            parse_const_expr(self.rhs)
            object.__setattr__(self, "rhs", ConstRequest(self.rhs))


@dataclass
class ReportEntry:
    id: str
    source: str
    lhs: Optional[complex]
    rhs: Optional[complex]
    abs_diff: Optional[float]
    status: str
    expected_status: str
    tolerance: float
    lhs_expr: str
    rhs_expr: str
    pipelines: dict = field(default_factory=dict)
    message: str = ""

    @property
    def as_expected(self) -> bool:
        return self.status == self.expected_status


@dataclass
class VerificationReport:
    entries: list
    environment: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        counts = {status: 0 for status in STATUSES}
        for e in self.entries:
            counts[e.status] += 1
        return {
            "total": len(self.entries),
            **counts,
            "unexpected": sum(1 for e in self.entries if not e.as_expected),
            "environment": self.environment,
        }

    @property
    def all_expected(self) -> bool:
        return all(e.as_expected for e in self.entries)

    def __getitem__(self, record_id: str) -> ReportEntry:
        for e in self.entries:
            if e.id == record_id:
                return e
        raise KeyError(record_id)


def verify_identity(record: IdentityRecord) -> ReportEntry:
    """Evaluate both sides; a mismatch is reported, never raised."""
    entry = ReportEntry(
        id=record.id,
        source=record.source,
        lhs=None,
        rhs=None,
        abs_diff=None,
        status=UNRESOLVED,
        expected_status=record.expected_status,
        tolerance=record.tolerance,
        lhs_expr=record.lhs.describe(),
        rhs_expr=record.rhs.describe(),
    )
    try:
        lhs: Evaluation = record.lhs.evaluate()
        rhs: Evaluation = record.rhs.evaluate()
    except (LehmerError, ValueError, ArithmeticError) as exc:
        entry.message = f"{type(exc).__name__}: {exc}"
        return entry
    entry.lhs, entry.rhs = lhs.value, rhs.value
    entry.pipelines = dict(lhs.pipelines)
    notes = list(lhs.notes) + list(rhs.notes)
    spread = lhs.spread()
    if spread > PIPELINE_FACTOR * record.tolerance:
        notes.insert(0, f"lhs pipelines disagree by {spread:.3g} (> {PIPELINE_FACTOR:g} x tolerance)")
        entry.message = "; ".join(notes)
        return entry
    diff = abs(lhs.value - rhs.value)
    entry.abs_diff = diff
    entry.status = CONFIRMED if diff <= record.tolerance else ERRATUM
    entry.message = "; ".join(notes)
    return entry


def run_registry(registry: Sequence[IdentityRecord], parallelism: int = 1, tolerance: Optional[float] = None) -> VerificationReport:
    """Verify every record; entries come back sorted by id.

    ``tolerance`` overrides every record's own tolerance.
    """
    records = list(registry)
    if tolerance is not None:
        records = [replace(r, tolerance=tolerance) for r in records]
    if parallelism > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            entries = list(pool.map(verify_identity, records))
    else:
        entries = [verify_identity(r) for r in records]
    entries.sort(key=lambda e: e.id)
    env = {
        "tolerance_override": tolerance,
        "pipeline_factor": PIPELINE_FACTOR,
        "series_term_cap": MAX_TERMS,
    }
    return VerificationReport(entries, env)


@dataclass
class ConsistencyEntry:
    s: int
    k: int
    z: complex
    values: dict
    max_deviation: Optional[float]
    status: str
    note: str = ""


def cross_check(s: int, k: int, z: complex, tol: float = 1e-10) -> ConsistencyEntry:
    """Compare direct summation, the integral and the root-sum pipelines.

    For k = 0 the integral and root sum carry the m = 0 term, so 1 is
    subtracted from each before comparing with the m >= 1 series.
    """
    values = {}
    notes = []
    try:
        values["series"] = sum_direct(SeriesSpec(s, k, z, start=1)).value
        if k >= 1:
            values["integral"] = weighted_integral(s, k, z).value
        else:
            values["integral"] = lehmer_integral(s, z).value - 1
        if z == 0:
            notes.append("root-sum skipped at z = 0")
        elif k > MAX_JET_ORDER:
            notes.append(f"root-sum skipped: k > {MAX_JET_ORDER}")
        elif k >= 1:
            values["rootsum"] = euler_apply(s, z, k)
        else:
            values["rootsum"] = root_sum(s, z) - 1
    except (LehmerError, ValueError, ArithmeticError) as exc:
        notes.append(f"{type(exc).__name__}: {exc}")
        return ConsistencyEntry(s, k, z, values, None, UNRESOLVED, "; ".join(notes))
    vals = list(values.values())
    dev = max((abs(a - b) for a in vals for b in vals), default=0.0)
    status = "PASS" if dev < tol else "FAIL"
    return ConsistencyEntry(s, k, z, values, dev, status, "; ".join(notes))


def admissible(s: int, z: complex) -> bool:
    """Inside the disc where direct summation converges."""
    return abs(z) < radius(s) and not math.isnan(abs(z))
