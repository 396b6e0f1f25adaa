import csv
import io
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lehmer.harness import (
    CONFIRMED,
    ERRATUM,
    UNRESOLVED,
    ExprSyntaxError,
    HypergeometricRequest,
    IdentityRecord,
    SeriesRequest,
    UnknownIdentifierError,
    bundled_registry,
    cross_check,
    evaluate,
    parse_const_expr,
    run_registry,
    serialize,
    to_csv,
    to_json,
    to_markdown,
    verify_identity,
)
from lehmer.harness.expr import BinOp, Neg, Number, Power, const_value
from lehmer.harness.registry import ACOT_CORRECTED, ACOT_PRINTED
from lehmer.series import SeriesSpec, sum_direct


# expression language

def test_parse_examples():
    assert const_value("(1335 - 22*pi - 351*log(2))/15625") == pytest.approx(0.0654457792796, abs=1e-12)
    assert const_value("1 + pi/2") == pytest.approx(2.5707963267949, abs=1e-12)
    assert const_value("sqrt(4)") == 2


def test_precedence():
    assert const_value("1 + 2*3") == 7
    assert const_value("(1 + 2)*3") == 9
    assert const_value("2*3^2") == 18
    assert const_value("-2^2") == 4
    assert const_value("12/4/3") == 1
    assert const_value("1 - 2 - 3") == -4
    assert const_value("2^-2") == 0.25
    assert const_value("0.5 + .25") == 0.75
    assert parse_const_expr("-3*2") == BinOp("*", Neg(Number("3")), Number("2"))
    assert parse_const_expr("-(1)^3") == Power(Neg(Number("1")), 3)


def test_functions():
    assert const_value("atan(1)") == pytest.approx(math.pi / 4)
    assert const_value("acot(5/sqrt(7))") == pytest.approx(math.atan(math.sqrt(7) / 5))
    with pytest.raises(ValueError):
        const_value("acot(-1)")
    with pytest.raises(ValueError):
        const_value("log(0)")


@pytest.mark.parametrize(
    "text,pos",
    [("1 +", 3), ("(1 + 2", 6), ("2 $ 3", 2), ("log 2", 4), ("1 2", 2), ("2^x", 2), ("", 0)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_const_expr(text)
    assert info.value.position == pos


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError) as info:
        parse_const_expr("1 + e")
    assert info.value.position == 4


def test_bundled_rhs_round_trip():
    for record in bundled_registry():
        for side in (record.lhs, record.rhs):
            text = getattr(side, "text", None)
            if text is None:
                continue
            tree = parse_const_expr(text)
            assert parse_const_expr(serialize(tree)) == tree


exprs = st.recursive(
    st.one_of(st.integers(0, 50).map(str), st.just("pi"), st.just("2.5")),
    lambda inner: st.one_of(
        st.tuples(inner, st.sampled_from("+-*/"), inner).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
        inner.map(lambda e: f"sqrt({e}*{e})"),
        inner.map(lambda e: f"-{e}" if not e.startswith("-") else e),
        st.tuples(inner, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
    ),
    max_leaves=8,
)


@settings(max_examples=200, deadline=None)
@given(exprs)
def test_round_trip_property(text):
    tree = parse_const_expr(text)
    again = parse_const_expr(serialize(tree))
    assert again == tree
    try:
        a = evaluate(tree)
    except ZeroDivisionError:
        return
    assert evaluate(again) == a or (math.isnan(a) and math.isnan(evaluate(again)))


# identity verification

def test_atan_record_confirmed():
    entry = verify_identity(IdentityRecord("t", SeriesRequest(2, 2, "2"), "1 + pi/2", "test", 1e-10, CONFIRMED))
    assert entry.status == CONFIRMED
    assert entry.abs_diff < 1e-10
    assert set(entry.pipelines) == {"series", "integral", "rootsum"}


def test_acot_erratum_and_correction():
    # direct-summation oracle for sum_{n>=0} (-1)^n / ((3n+1) 4^n C(3n, n))
    oracle = sum_direct(SeriesSpec(3, 0, -0.25, start=0)).value
    printed = const_value(ACOT_PRINTED)
    corrected = const_value(ACOT_CORRECTED)
    assert abs(oracle - printed) == pytest.approx(0.92, abs=0.005)
    assert abs(oracle - corrected) < 1e-9
    lhs = SeriesRequest(3, 0, "-1/4", start=0)
    assert verify_identity(IdentityRecord("p", lhs, ACOT_PRINTED, "test", 1e-9, ERRATUM)).status == ERRATUM
    assert verify_identity(IdentityRecord("c", lhs, ACOT_CORRECTED, "test", 1e-9, CONFIRMED)).status == CONFIRMED


def test_self_comparison():
    value = sum_direct(SeriesSpec(3, 1, 1.0)).value
    entry = verify_identity(IdentityRecord("self", SeriesRequest(3, 1, "1"), repr(value), "self", 1e-12, CONFIRMED))
    assert entry.status == CONFIRMED


def test_impossible_record_is_unresolved():
    report = run_registry([IdentityRecord("bad", SeriesRequest(2, 0, "5"), "1", "forced", 1e-10, UNRESOLVED)])
    entry = report["bad"]
    assert entry.status == UNRESOLVED
    assert "convergence" in entry.message
    assert entry.abs_diff is None
    assert report.all_expected


def test_empty_registry():
    report = run_registry([])
    assert report.entries == []
    assert report.summary["total"] == 0
    assert json.loads(to_json(report))["records"] == []


def test_record_validation():
    with pytest.raises(ValueError):
        IdentityRecord("x", SeriesRequest(2, 0, "1"), "1", "s", 0.0, CONFIRMED)
    with pytest.raises(ValueError):
        IdentityRecord("x", SeriesRequest(2, 0, "1"), "1", "s", 1e-9, "MAYBE")
    with pytest.raises(ExprSyntaxError):
        IdentityRecord("x", SeriesRequest(2, 0, "1"), "1 +", "s", 1e-9, CONFIRMED)


def test_hypergeometric_request_term_ratio():
    # 2F1(1, 1; 2; x) = -log(1 - x)/x
    req = HypergeometricRequest(("1", "1"), ("2",), "1/2")
    assert req.term_ratio_sum() == pytest.approx(2 * math.log(2), abs=1e-15)


def test_cubic_series_identification():
    # (1/36) 5F4[3/2,2,2,2,2; 1,1,5/3,7/3; 4/81] is sum_{n>=1} n^3 (1/3)^n / ((3n+1) C(3n, n))
    req = HypergeometricRequest(("3/2", "2", "2", "2", "2"), ("1", "1", "5/3", "7/3"), "4/81", scale="1/36")
    assert req.evaluate().value == pytest.approx(sum_direct(SeriesSpec(3, 3, 1 / 3)).value, abs=1e-15)


# bundled registry

@pytest.fixture(scope="module")
def report():
    return run_registry(bundled_registry())


def test_required_records_present(report):
    ids = {e.id for e in report.entries}
    for rid in ("atan-s2-z2", "atan-s2-half", "acot-s3", "acot-s3-corrected", "log2-s3-k3", "pi-sqrt3-s2-k1", "cubic-root-expression", "rootsum-vs-series", "rootsum-vs-series-corrected", "integral-vs-series"):
        assert rid in ids


def test_bundled_statuses(report):
    for rid in ("atan-s2-z2", "atan-s2-half", "log2-s3-k3", "pi-sqrt3-s2-k1"):
        assert report[rid].status == CONFIRMED
    assert report["acot-s3"].status == ERRATUM
    assert report["rootsum-vs-series"].status == ERRATUM
    assert report["rootsum-vs-series"].abs_diff == pytest.approx(1, abs=1e-10)
    assert report["integral-vs-series"].abs_diff == pytest.approx(1, abs=1e-10)
    assert report.summary["CONFIRMED"] >= 4
    assert report.summary["ERRATUM"] >= 2
    assert report.all_expected


def test_confirmed_records_have_two_agreeing_pipelines(report):
    for e in report.entries:
        if e.status == CONFIRMED:
            assert e.abs_diff <= e.tolerance
            assert len(e.pipelines) >= 2, e.id
            vals = list(e.pipelines.values())
            assert max(abs(a - b) for a in vals for b in vals) <= 10 * e.tolerance


def test_reports_are_deterministic(report):
    again = run_registry(bundled_registry(), parallelism=4)
    assert to_json(again) == to_json(report)
    assert to_csv(again) == to_csv(report)


def test_json_schema(report):
    doc = json.loads(to_json(report))
    assert list(doc) == ["records", "summary"]
    first = doc["records"][0]
    assert list(first)[:6] == ["id", "source", "lhs", "rhs", "abs_diff", "status"]
    assert doc["summary"]["total"] == len(report.entries)


def test_csv_rows(report):
    rows = list(csv.DictReader(io.StringIO(to_csv(report))))
    assert len(rows) == len(report.entries)
    assert list(rows[0])[:6] == ["id", "source", "lhs", "rhs", "abs_diff", "status"]
    by_id = {r["id"]: r for r in rows}
    assert float(by_id["atan-s2-z2"]["lhs"]) == pytest.approx(1 + math.pi / 2)


def test_markdown(report):
    text = to_markdown(report)
    assert text.startswith("| id | source | lhs | rhs | abs_diff | status |")
    assert "| acot-s3 |" in text and "ERRATUM" in text


def test_tolerance_override_breaks_expectations():
    report = run_registry(bundled_registry(), tolerance=1e-30)
    assert not report.all_expected


# cross checks

def test_cross_check_examples():
    entry = cross_check(2, 0, 2.0)
    assert entry.status == "PASS"
    for v in entry.values.values():
        assert v == pytest.approx(math.pi / 2 - 1, abs=1e-12)
    entry = cross_check(3, 1, 1.0, tol=1e-9)
    assert entry.status == "PASS" and len(entry.values) == 3
    entry = cross_check(2, 0, 0.0)
    assert entry.status == "PASS"
    assert entry.values == {"series": 0.0, "integral": 0.0}


def test_cross_check_out_of_domain():
    entry = cross_check(2, 1, 4.5)
    assert entry.status == UNRESOLVED
    assert "convergence" in entry.note
