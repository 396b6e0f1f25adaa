"""Bundled identities.

Printed closed forms are stored verbatim.  Where a printed form disagrees
with its own left-hand side, a separate ``*-corrected`` record carries the
repaired form and must come out CONFIRMED.
"""

from __future__ import annotations

from .requests import (
    HypergeometricRequest,
    IntegralRequest,
    RootExpressionRequest,
    RootSumRequest,
    SeriesRequest,
)
from .verify import CONFIRMED, ERRATUM, IdentityRecord

ATAN_HALF_RHS = "(12/343)*(-56+26*sqrt(7)*pi-52*sqrt(7)*atan(3/sqrt(7)))"
ACOT_PRINTED = "-5*acot(5/sqrt(7))/(2*sqrt(7)) + 3*log(2)/4"
ACOT_CORRECTED = "5*acot(5/sqrt(7))/(2*sqrt(7)) + 3*log(2)/4"
LOG2_RHS = "(1335 - 22*pi - 351*log(2))/15625"
PI_SQRT3_RHS = "-(2/27)*(-9 + sqrt(3)*pi)"

# H(X) = 3 - X^2 + X^3 is 3 times the Lehmer polynomial at s = 3, z = 1/3
CUBIC_POLY = (3, 0, -1, 1)
CUBIC_NUMERATOR = (-13897, 2738)
CUBIC_DENOMINATOR = (0, -2, 3)


def bundled_registry() -> list[IdentityRecord]:
    return [
        IdentityRecord(
            "atan-s2-z2",
            SeriesRequest(2, 2, "2"),
            "1 + pi/2",
            "s = 2, k = 2, z = 2; arctangent closed form",
            1e-10,
            CONFIRMED,
        ),
        IdentityRecord(
            "atan-s2-half",
            SeriesRequest(2, 2, "1/2", scale="12"),
            ATAN_HALF_RHS,
            "s = 2, k = 2, z = 1/2; arctangent closed form",
            1e-9,
            CONFIRMED,
        ),
        IdentityRecord(
            "atan-s2-half-3f2",
            HypergeometricRequest(("2", "2", "2"), ("1", "5/2"), "1/8", equivalent=SeriesRequest(2, 2, "1/2", scale="12")),
            ATAN_HALF_RHS,
            "s = 2, k = 2, z = 1/2; 3F2 form",
            1e-9,
            CONFIRMED,
        ),
        IdentityRecord(
            "acot-s3",
            SeriesRequest(3, 0, "-1/4", start=0),
            ACOT_PRINTED,
            "s = 3, z = -1/4; arccot closed form as printed",
            1e-9,
            ERRATUM,
            "sign of the arccot term",
        ),
        IdentityRecord(
            "acot-s3-corrected",
            SeriesRequest(3, 0, "-1/4", start=0),
            ACOT_CORRECTED,
            "s = 3, z = -1/4; arccot sign flipped",
            1e-9,
            CONFIRMED,
        ),
        IdentityRecord(
            "acot-s3-3f2",
            HypergeometricRequest(("1/2", "1", "1"), ("2/3", "4/3"), "-1/27", equivalent=SeriesRequest(3, 0, "-1/4", start=0)),
            ACOT_CORRECTED,
            "s = 3, z = -1/4; 3F2 form vs corrected closed form",
            1e-9,
            CONFIRMED,
        ),
        IdentityRecord(
            "log2-s3-k3",
            SeriesRequest(3, 3, "1/2", start=0),
            LOG2_RHS,
            "s = 3, k = 3, z = 1/2; log 2 closed form",
            1e-10,
            CONFIRMED,
        ),
        IdentityRecord(
            "pi-sqrt3-s2-k1",
            SeriesRequest(2, 1, "1", start=0),
            PI_SQRT3_RHS,
            "s = 2, k = 1, z = 1; pi sqrt 3 closed form",
            1e-10,
            CONFIRMED,
        ),
        IdentityRecord(
            "cubic-root-expression",
            HypergeometricRequest(
                ("3/2", "2", "2", "2", "2"),
                ("1", "1", "5/3", "7/3"),
                "4/81",
                scale="1/36",
                equivalent=SeriesRequest(3, 3, "1/3"),
            ),
            RootExpressionRequest(CUBIC_POLY, CUBIC_NUMERATOR, CUBIC_DENOMINATOR, "30033/456533", "3/456533"),
            "5F4 at 4/81 vs root expression over 3 - X^2 + X^3",
            1e-10,
            CONFIRMED,
            "5F4 side equals sum n^3 (1/3)^n/((3n+1)C(3n,n))",
        ),
        IdentityRecord(
            "rootsum-vs-series",
            SeriesRequest(2, 0, "2", start=1),
            RootSumRequest(2, "2"),
            "root sum vs series from m = 1 as printed",
            1e-10,
            ERRATUM,
            "root sum includes the m = 0 term",
        ),
        IdentityRecord(
            "rootsum-vs-series-corrected",
            SeriesRequest(2, 0, "2", start=0),
            RootSumRequest(2, "2"),
            "root sum vs series with the m = 0 term",
            1e-10,
            CONFIRMED,
        ),
        IdentityRecord(
            "rootsum-s3-vs-series-corrected",
            SeriesRequest(3, 0, "1/2", start=0),
            RootSumRequest(3, "1/2"),
            "root sum vs series, s = 3, with the m = 0 term",
            1e-10,
            CONFIRMED,
        ),
        IdentityRecord(
            "rootsum-s2-z2",
            RootSumRequest(2, "2"),
            "pi/2",
            "root sum closed form at s = 2, z = 2",
            1e-12,
            CONFIRMED,
        ),
        IdentityRecord(
            "integral-vs-series",
            IntegralRequest(2, "2"),
            SeriesRequest(2, 0, "2", start=1),
            "integral vs series from m = 1 as printed",
            1e-10,
            ERRATUM,
            "integral includes the m = 0 term",
        ),
        IdentityRecord(
            "integral-vs-series-corrected",
            IntegralRequest(2, "2"),
            SeriesRequest(2, 0, "2", start=0),
            "integral vs series with the m = 0 term",
            1e-10,
            CONFIRMED,
        ),
    ]
