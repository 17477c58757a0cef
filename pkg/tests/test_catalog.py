from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import CATALOG
from lieb import catalog
from lieb.algebra import killing_form
from lieb.catalog.expr import evaluate, multivector, scalar
from lieb.catalog.regress import check_root_flags, run_fixtures
from lieb.errors import BadParameter, ParseError, UnknownName
from lieb.exterior import MultiVector, parse_multivector

F = Fraction


def br(L, a, b):
    return {L.basis[k]: v for k, v in L.bracket_basis(L.basis.index(a), L.basis.index(b)).items()}


def test_list_names():
    assert set(catalog.list_names()) == {
        "sl2", "su2", "h", "r3_0p", "r3_m1", "r3_1", "r3", "r3_lambda", "r3_lambda_p", "so22", "so32",
    }


def test_su2_brackets():
    L, grads = catalog.get_algebra("su2")
    assert br(L, "e1", "e2") == {"e3": 1}
    assert br(L, "e1", "e3") == {"e2": -1}
    assert br(L, "e3", "e2") == {"e1": -1}
    assert [g.group.moduli for g in grads] == [(2,)]


def test_so32_brackets():
    L, _ = catalog.get_algebra("so32")
    assert L.dim == 10
    assert br(L, "Rp", "Rm") == {"K3": -4, "J3": -4}
    assert br(L, "Jp", "Kp") == {"Rp": 1}
    assert br(L, "Jm", "Km") == {"Rm": -1}


def test_r3_lambda_brackets():
    L, _ = catalog.get_algebra("r3_lambda", [F(1, 2)])
    assert br(L, "e3", "e2") == {"e2": F(1, 2)}
    L, _ = catalog.get_algebra("r3_lambda", ["-1/3"])
    assert br(L, "e3", "e1") == {"e1": 1}
    assert br(L, "e3", "e2") == {"e2": F(-1, 3)}


def test_r3_1_has_both_gradations():
    _, grads = catalog.get_algebra("r3_1")
    assert sorted(g.group.rank for g in grads) == [1, 2]


def test_unknown_and_bad_params():
    with pytest.raises(UnknownName):
        catalog.get_algebra("sl3")
    with pytest.raises(UnknownName):
        catalog.expected_results("nope")
    with pytest.raises(BadParameter):
        catalog.get_algebra("r3_lambda", [1])
    with pytest.raises(BadParameter):
        catalog.get_algebra("r3_lambda", [])
    with pytest.raises(BadParameter):
        catalog.get_algebra("r3_lambda_p", [0])
    with pytest.raises(BadParameter):
        catalog.get_algebra("sl2", [1])
    with pytest.raises(BadParameter):
        catalog.get_algebra("r3_lambda", ["x"])


def test_parse_reference():
    assert catalog.parse_reference("catalog:sl2") == ("sl2", None)
    assert catalog.parse_reference("catalog:r3_lambda:1/2") == ("r3_lambda", (F(1, 2),))
    with pytest.raises(BadParameter):
        catalog.parse_reference("catalog:r3_lambda:a")


def test_expected_results_examples():
    sl2 = catalog.expected_results("sl2")
    assert any(f["grade"] == 3 and f["matrix"] == [[-8]] for f in sl2.of_kind("killing"))
    so22 = catalog.expected_results("so22")
    dec = [f for f in so22.of_kind("decomposition") if f["grade"] == 2][0]
    assert sorted(dec["bases"]["0,0"]) == ["e0f0", "emep", "fmfp"]
    h = catalog.expected_results("h")
    inv = [f for f in h.of_kind("invariants") if f["grade"] == 2][0]
    assert inv["basis"] == ["e13", "e23"]
    assert inv["source"] == "corrected" and inv["rejected_value"] == ["e12", "e13"]


def test_fixture_metadata():
    for name in catalog.list_names():
        for f in catalog.entry(name).doc["fixtures"]:
            assert f["anchor"]
            assert f["source"] in {"reference", "derived", "corrected"}
            if f["source"] == "corrected":
                assert f.get("note")


def test_when_guards_filter():
    zero = catalog.expected_results("r3_lambda", [0])
    half = catalog.expected_results("r3_lambda", [F(1, 2)])
    assert not [f for f in zero.of_kind("decomposition")]
    assert half.of_kind("decomposition")


@pytest.mark.parametrize("ref", CATALOG, ids=lambda r: r[0] + "".join(f":{x}" for x in r[1]))
def test_every_fixture_passes(ref):
    results = run_fixtures(*ref)
    assert results
    bad = [(r.label(), r.detail) for r in results if not r.passed]
    assert not bad


@pytest.mark.parametrize("ref", CATALOG, ids=lambda r: r[0] + "".join(f":{x}" for x in r[1]))
def test_root_flags(ref):
    for _, want, got in check_root_flags(*ref):
        assert want == got


def test_so22_is_two_commuting_sl2():
    L, _ = catalog.get_algebra("so22")
    es, fs = ["em", "e0", "ep"], ["fm", "f0", "fp"]
    for a in es:
        for b in fs:
            assert br(L, a, b) == {}
    K = killing_form(L).tensor
    i = {b: k for k, b in enumerate(L.basis)}
    assert K[i["e0"], i["e0"]] == K[i["f0"], i["f0"]] == 2
    assert K[i["em"], i["ep"]] == K[i["fm"], i["fp"]] == 2
    sl2, _ = catalog.get_algebra("sl2")
    # (e0, e+, e-) -> (e1, e2, e3) identifies each copy with sl2
    for copy in (["e0", "ep", "em"], ["f0", "fp", "fm"]):
        for x in range(3):
            for y in range(3):
                want = {copy[k]: v for k, v in sl2.bracket_basis(x, y).items()}
                assert br(L, copy[x], copy[y]) == want


def test_expr_evaluator():
    L, _ = catalog.get_algebra("sl2")
    assert scalar("1/2 + lam*2", {"lam": F(1, 3)}) == F(7, 6)
    assert evaluate("lam != 0 and lam < 1", {"lam": F(1, 2)}) is True
    assert multivector(L, "2*a*e12 - (e1^e3)", {"a": 3}) == parse_multivector(L, "6*e12 - e13")
    # ^ binds looser than + and -, as in Python
    assert multivector(L, "2*a*e12 - e1^e3", {"a": 3}) == parse_multivector(L, "6*e123 - e13")
    assert multivector(L, "(e1+e2)^(e1-e2)") == parse_multivector(L, "-2*e12")
    assert multivector(L, "e2^e1") == MultiVector.basis(L, 0, 1) * -1
    for bad in ("e1*e2", "__import__('os')", "lam(", "foo"):
        with pytest.raises(ParseError):
            multivector(L, bad, {"lam": 1})


def test_to_json_value():
    assert catalog.to_json_value({1: [F(1, 2), (F(3),)]}) == {"1": ["1/2", ["3"]]}
