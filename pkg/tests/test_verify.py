import json

import pytest

from kirchhoff.graph import complete_graph, cycle_graph, predict_sizes
from kirchhoff.verify import (
    SCHEMA,
    ReportRow,
    VerificationReport,
    builtin_corpus,
    corpus_subset,
    make_row,
    verify,
    verify_graph,
)


@pytest.fixture(scope="module")
def report():
    return verify(corpus_subset(["P2", "C4", "K4", "K1,3", "rand00"]))


def test_builtin_corpus_is_deterministic():
    a, b = builtin_corpus(), builtin_corpus()
    assert [gid for gid, _ in a] == [gid for gid, _ in b]
    assert all(ga == gb for (_, ga), (_, gb) in zip(a, b))
    assert len(a) == 7 + 6 + 4 + 4 + 20


def test_full_corpus_passes(corpus):
    rep = verify(corpus)
    assert rep.passed, rep.failures()[:5]


def test_rows_sorted(report):
    keys = [(r.graph_id, r.formula_name) for r in report.rows]
    assert keys == sorted(keys)


def test_one_row_per_formula(report):
    keys = [(r.graph_id, r.formula_name) for r in report.rows]
    assert len(keys) == len(set(keys))


def test_known_rows(report):
    row = report.row("P2", "R(S^2)")
    assert row.closed_form_value == 20 and row.oracle_value == 20
    assert report.row("C4", "R(S)").oracle_value == pytest.approx(42)
    assert report.row("P2", "R*(T^2)").oracle_value == pytest.approx(84)
    assert report.row("K4", "regular R(T)").passed
    with pytest.raises(KeyError):
        report.row("K1,3", "regular R(T)")


def test_row_catalogue():
    names = {r.formula_name for r in verify_graph(cycle_graph(5), "C5", max_k_s=2, max_k_t=1)}
    expected = {"foster", "lift(S)", "lift(T)", "S-T resistance relation",
                "partial(V'xV)", "partial(V'xV,deg)", "partial(V'xV')",
                "regular R+=2rR", "regular R*=r^2R", "regular R(T)"}
    for inv in ("R", "R+", "R*"):
        expected |= {f"{inv}(S)", f"{inv}(T)", f"{inv}(T) via S",
                     f"{inv}(S^1)", f"{inv}(S^2)", f"{inv}(T^1)"}
    assert names == expected


def test_json_round_trip(report):
    text = report.to_json()
    d = json.loads(text)
    assert d["schema"] == SCHEMA
    assert d["corpus_summary"] == {"graphs": 5, "rows": len(report.rows),
                                   "passed": len(report.rows), "failed": 0}
    assert {"graph_id", "formula_name", "closed_form_value", "oracle_value",
            "abs_residual", "rel_residual", "pass"} <= set(d["rows"][0])
    back = VerificationReport.from_json(text)
    assert back.rows == report.rows
    assert back.tolerance == report.tolerance


def test_json_rejects_bad_schema(report):
    d = report.to_dict()
    d["schema"] = "other/9"
    with pytest.raises(ValueError):
        VerificationReport.from_dict(d)


def test_json_rejects_inconsistent_summary(report):
    d = report.to_dict()
    d["corpus_summary"]["failed"] = 3
    with pytest.raises(ValueError):
        VerificationReport.from_dict(d)


def test_parallel_matches_serial():
    graphs = corpus_subset(["P3", "C5", "K5", "rand01", "rand02", "rand03"])
    assert verify(graphs, jobs=4).rows == verify(graphs, jobs=1).rows


def test_make_row_failure_and_zero_oracle():
    bad = make_row("g", "x", 101.0, 100.0, 1e-9)
    assert not bad.passed and bad.rel_residual == pytest.approx(0.01)
    zero = make_row("g", "x", 1e-12, 0.0, 1e-9)
    assert zero.passed and zero.rel_residual == zero.abs_residual


def test_failing_row_fails_report():
    row = ReportRow("g", "x", 1.0, 2.0, 1.0, 0.5, False)
    rep = VerificationReport("g", "float", 1e-9, [row])
    assert not rep.passed and rep.failures() == [row]
    assert "FAIL" in rep.format_table()


def test_rational_backend_exact_rows():
    rows = verify_graph(complete_graph(3), "K3", backend="rational", max_k_s=2, max_k_t=2)
    assert all(r.passed for r in rows)
    assert all(r.abs_residual == 0 for r in rows if r.oracle_backend == "rational")
    assert {r.oracle_backend for r in rows} == {"rational"}


def test_rational_falls_back_above_cap():
    g = complete_graph(6)
    rows = verify_graph(g, "K6", backend="rational", max_k_s=3, max_k_t=1)
    backends = {r.formula_name: r.oracle_backend for r in rows}
    for k in (1, 2, 3):
        big = predict_sizes(g.n, g.m, "S", k).n_k > 64
        assert backends[f"R(S^{k})"] == ("float" if big else "rational")
    assert backends["R(S^3)"] == "float"
    assert all(r.passed for r in rows)
