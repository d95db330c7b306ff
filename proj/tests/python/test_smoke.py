"""Smoke layer: the bindings expose the exact engine with working error
translation and stable serialized artifacts."""

import json
import math

import pytest

import nonarch


Q3 = nonarch.Field("Qp", 3)


def test_field_repr_and_eq():
    assert repr(Q3) == "Q_3"
    assert Q3.p == 3
    assert Q3 == nonarch.Field("Qp", 3)
    assert Q3 != nonarch.Field("FpT", 3)
    with pytest.raises(ValueError):
        nonarch.Field("Rp", 3)


def test_phase_json_round_trip():
    f = nonarch.Phase(Q3, [(2, "1"), (0, "1/3")])
    wire = json.loads(nonarch.phase_json(f))
    assert wire["field"] == {"kind": "Qp", "p": 3}
    assert sorted(wire["coeffs"]) == [[0, "1/3"], [2, "1"]]
    g = nonarch.phase_from_json(nonarch.phase_json(f))
    assert nonarch.phase_json(g) == nonarch.phase_json(f)


def test_sp_number_and_regular_degree():
    f = nonarch.Phase(nonarch.Field("Qp", 2), [(1, "1"), (4, "1/2")])
    r = nonarch.sp_number(f)
    assert r["decided"] and not r["infinite"] and r["r"] == 1
    reg = nonarch.regular_degree(nonarch.Phase(Q3, [(2, "1")]))
    assert reg["d"] == 2
    with pytest.raises(ValueError):
        nonarch.regular_degree(nonarch.Phase(Q3, [(0, "1")]))


def test_eval_integral_gauss_value():
    f = nonarch.Phase(Q3, [(2, "1")])
    v = nonarch.eval_integral(f, "1")
    assert not v["zero"]
    assert abs(v["magnitude"] - 1 / math.sqrt(3)) <= 1e-9 + v["err"]
    z = nonarch.eval_integral(nonarch.Phase(Q3, [(1, "1")]), "1")
    assert z["zero"] and z["magnitude"] == 0.0


def test_eval_integral_cap_limit():
    f = nonarch.Phase(Q3, [(2, "1")])
    with pytest.raises(RuntimeError):
        nonarch.eval_integral(f, "1/81", cap=10)


def test_decay_csv_shape():
    csv = nonarch.decay_csv(nonarch.Phase(Q3, [(2, "1")]), 2, jmin=0, jmax=3)
    lines = csv.strip().split("\n")
    assert lines[0] == "j,shell_size,sup_norm,error_bound,ratio"
    assert len(lines) == 5
    assert lines[1].startswith("0,")


def test_chart_and_manifold_type():
    chart_wire = json.dumps(
        {
            "field": {"kind": "Qp", "p": 3},
            "d": 1,
            "n": 2,
            "components": [[[[1], "1"]], [[[2], "1"]]],
        }
    )
    chart = nonarch.Chart(chart_wire)
    assert chart.dim == 1 and chart.ambient == 2
    assert nonarch.manifold_type(chart) == "type 2"
    with pytest.raises(ValueError):
        nonarch.Chart("{}")


def test_restriction_csv_determinism():
    chart = nonarch.Chart(
        json.dumps(
            {
                "field": {"kind": "Qp", "p": 3},
                "d": 1,
                "n": 2,
                "components": [[[[1], "1"]], [[[2], "1"]]],
            }
        )
    )
    a = nonarch.restriction_csv(chart, 2, "8/7", trials=5, seed=7)
    b = nonarch.restriction_csv(chart, 2, "8/7", trials=5, seed=7)
    assert a == b
    assert a.startswith("trial,lhs,rhs_norm,ratio")
    with pytest.raises(ValueError):
        nonarch.restriction_csv(chart, 2, "3", trials=2)


def test_run_suite_fields():
    ok, report = nonarch.run_suite("fields", seed=42)
    assert ok
    assert "ok fields." in report and "FAIL" not in report
