import pytest

import alphanorm as an


def test_parse_round_trip():
    assert an.parse("Pi(U,El(q))") == "Pi(U, El(q))"
    assert an.parse("U[p;id]") == "U[p ; id]"
    assert an.sort("<> |> U") == "ctx"
    assert an.sort("inU(0)") == "tm"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        an.parse("Pi(U,")
    with pytest.raises(an.ParseError):
        an.norm("U[")


def test_check():
    assert an.check("q", ctx="<> |> U") == {"ok": True, "result": "U[p]"}
    r = an.check("inU(0)", ctx="<> |> U")
    assert not r["ok"]
    assert r["at"] == "inU(0)"
    ident = "lam(U, lam(El(q), q))"
    assert an.check(ident, type="Pi(U, Pi(El(q), El(q)[p]))")["ok"]
    with pytest.raises(ValueError):
        an.check("U", sig="x=2;y=1")


def test_norm_and_equality():
    assert an.norm("U[p][id]") == "U"
    assert an.norm("Pi(U, El(q))[id]") == "Pi(U, El(q))"
    assert an.decide_eq("U[p]", "U") is True
    assert an.decide_eq("U", "Pi(U, U[p])") is False
    assert an.oracle_eq("U[id]", "U", max_size=6, max_depth=2) == "equal"
    assert an.oracle_eq("U", "Pi(U, U[p])") == "distinct"


def test_certificates():
    text = an.compl_cert("U[p][id]")
    assert text.startswith("source: U\ntarget: U[p][id]\n")
    assert an.check_cert(text) == (True, None, "")
    ok, step, _ = an.check_cert("source: U\ntarget: U[p]\nstep USub at root bwd g=id\n")
    assert not ok and step == 1


def test_evaluate():
    assert [env for env, _ in an.evaluate("<> |> U", sig="x=2;y=1,1")] == ["((), x0)", "((), x1)"]
    [(env, tables)] = an.evaluate("Pi(U, El(q))", sig="x=2;y=1,2")
    assert env == "()" and len(tables) == 2
    [(_, ident)] = an.evaluate("lam(U, lam(El(q), q))", sig="x=2;y=2,1")
    assert ident == "{x0 -> {y0_0 -> y0_0, y0_1 -> y0_1}, x1 -> {y1_0 -> y1_0}}"
    with pytest.raises(an.TooLarge):
        an.evaluate("Pi(Pi(U, U), U)", sig="x=2;y=1,1", cap=3)


def test_enumeration_and_cli():
    assert an.enumerate_tys("<>", 1) == ["U"]
    assert "El(inU(0))" in an.enumerate_tys("<>", 2)
    code, out, _ = an.run_cli(["eq", "-e", "U[p]", "-e", "U"])
    assert (code, out) == (0, "true\n")
    code, _, err = an.run_cli(["norm", "-e", "Pi(U"])
    assert code == 2 and "parse error" in err
