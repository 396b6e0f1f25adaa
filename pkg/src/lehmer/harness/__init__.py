"""Verification harness for the bundled closed-form identities."""

from .expr import ExprSyntaxError, UnknownIdentifierError, evaluate, parse_const_expr, serialize
from .registry import bundled_registry
from .report import FORMATTERS, to_csv, to_json, to_markdown
from .requests import (
    ConstRequest,
    HypergeometricRequest,
    IntegralRequest,
    RootExpressionRequest,
    RootSumRequest,
    SeriesRequest,
)
from .verify import (
    CONFIRMED,
    ERRATUM,
    UNRESOLVED,
    ConsistencyEntry,
    IdentityRecord,
    ReportEntry,
    VerificationReport,
    cross_check,
    run_registry,
    verify_identity,
)
