import json

import pytest

import cucalc


def test_carriers_and_axioms():
    s = cucalc.Carrier.parse("extnat^2")
    assert s == cucalc.Carrier.extnat(2)
    assert s.dim == 2
    rep = cucalc.Carrier.pbar().axioms(budget=16)
    assert rep["passed"]
    assert {r["name"] for r in rep["results"]} >= {"O1 suprema", "O2 approximation"}
    f = cucalc.Carrier.parse("finite { 0, a | a+a=a }")
    assert f.is_finite
    assert f.describe() == "{0,a | a+a=a |}"


def test_ihom_and_solid():
    assert cucalc.ihom(cucalc.Carrier.extnat(2), cucalc.Carrier.extnat(3))["name"] == "M_{3,2}(extnat)"
    rep = cucalc.solid("pbar")
    assert rep["conditions"] == ["holds", "holds", "holds", "fails", "fails"]
    assert rep["consistent"]
    with pytest.raises(ValueError):
        cucalc.solid("nothing")


def test_ideals_and_simplicity():
    assert cucalc.Carrier.trunchom().ideals() == ["{0}", "{x : x <= soft inf}", "trunchom"]
    assert not cucalc.Carrier.trunchom().is_simple()
    assert cucalc.Carrier.pbar().is_simple()


def test_oracle_and_bijection():
    cs = cucalc.generate_finite_cu(3)
    assert len(cs) == 4
    assert all(cucalc.closed_bijection(s, t, cs[-1])["passed"] for s in cs for t in cs)
    assert cucalc.oracle(2, "bijection")["passed"]


def test_run_and_diagnostics():
    code, out = cucalc.run("ihom extnat^2 extnat^3\n", json=True)
    assert code == 0
    assert json.loads(out)["schema"] == "cucalc.report.v1"
    code, out = cucalc.run("axioms nothing\n")
    assert code == 2
    assert out.startswith("error: 1:8:")
    with pytest.raises(cucalc.ParseError):
        cucalc.canonical("carrier S extnat\n")
    assert cucalc.canonical("carrier  S=extnat ^ 2") == "carrier S = extnat^2\n"
