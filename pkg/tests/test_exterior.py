from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CATALOG, algebra_of, rationals
from lieb import catalog
from lieb.algebra import load_algebra
from lieb.errors import AlgebraMismatch, GradeOutOfRange, MixedGrade, ParseError, ZeroInput
from lieb.exterior import (
    MultiVector,
    ad_power,
    annihilator_span,
    blades,
    format_multivector,
    lambda_power,
    multivector_from_json,
    parse_multivector,
    schouten,
    wedge,
)
from lieb.linalg import Subspace, identity

# h ⊕ R: nilpotent, four-dimensional, two-dimensional center
H4 = load_algebra({"name": "h4", "basis": ["e1", "e2", "e3", "e4"], "brackets": [{"i": 1, "j": 2, "result": {"3": "1"}}]})
# a solvable four-dimensional algebra with non-trivial brackets in every slot
S4 = load_algebra(
    {
        "name": "s4",
        "basis": ["e1", "e2", "e3", "e4"],
        "brackets": [
            {"i": 1, "j": 2, "result": {"3": "1"}},
            {"i": 4, "j": 1, "result": {"1": "1"}},
            {"i": 4, "j": 2, "result": {"2": "1"}},
            {"i": 4, "j": 3, "result": {"3": "2"}},
        ],
    }
)
SMALL_ALGEBRAS = [algebra_of(r)[0] for r in CATALOG if algebra_of(r)[0].dim <= 4] + [H4, S4]


def mv(L, text):
    return parse_multivector(L, text)


def test_wedge_examples():
    L, _ = catalog.get_algebra("sl2")
    assert wedge(mv(L, "e1"), mv(L, "e2")) == mv(L, "e12")
    assert wedge(mv(L, "e2"), mv(L, "e1")) == mv(L, "-e12")
    assert wedge(mv(L, "e1+e2"), mv(L, "e1-e2")) == mv(L, "-2*e12")
    other, _ = catalog.get_algebra("su2")
    with pytest.raises(AlgebraMismatch):
        wedge(mv(L, "e1"), mv(other, "e1"))


def test_schouten_examples():
    L, _ = catalog.get_algebra("sl2")
    assert schouten(mv(L, "e1"), mv(L, "e2")) == mv(L, "e2")
    assert schouten(mv(L, "e12"), mv(L, "e3")) == mv(L, "e23")
    assert schouten(MultiVector.scalar(L), mv(L, "e12+e3")).is_zero()


@pytest.mark.parametrize("L", SMALL_ALGEBRAS, ids=lambda L: L.name)
def test_schouten_matches_leibniz_recursion(L):
    C = oracles.structure(L)
    n = L.dim
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p + q - 1 > n:
                continue
            for I in blades(n, p):
                for J in blades(n, q):
                    got = oracles.to_dict(schouten(MultiVector.basis(L, *I), MultiVector.basis(L, *J)))
                    assert got == oracles.schouten_blades(C, I, J), (I, J)


def test_lambda_power_examples():
    L, _ = catalog.get_algebra("sl2")
    A = lambda_power(L.ad_matrices[0], 2).matrix
    bs = blades(3, 2)
    assert A[bs.index((1, 2)), bs.index((1, 2))] == 0
    for c, J in enumerate(bs):
        assert A[:, c].tolist() == schouten(mv(L, "e1"), MultiVector.basis(L, *J)).coords(2)
    c = Fraction(3, 2)
    assert (lambda_power(c * identity(3), 2, "multiplicative").matrix == c**2 * identity(3)).all()
    assert (lambda_power(identity(3), 3).matrix == 3 * identity(1)).all()
    with pytest.raises(GradeOutOfRange):
        lambda_power(identity(3), 4)


def test_annihilator_examples():
    L, _ = catalog.get_algebra("sl2")
    span, dec = annihilator_span(mv(L, "e12"))
    assert span == Subspace.span([[1, 0, 0], [0, 1, 0]], 3) and dec
    span, dec = annihilator_span(mv(H4, "e12+e34"))
    assert span.dim == 0 and not dec
    span, dec = annihilator_span(mv(L, "e123"))
    assert span.is_full() and dec
    with pytest.raises(ZeroInput):
        annihilator_span(MultiVector(L))
    with pytest.raises(MixedGrade):
        annihilator_span(mv(L, "e1+e12"))


def test_parse_and_format():
    L, _ = catalog.get_algebra("sl2")
    w = mv(L, "3/2*e12 - e13 + e123")
    assert w.terms == {(0, 1): Fraction(3, 2), (0, 2): -1, (0, 1, 2): 1}
    assert format_multivector(w) == "3/2*e12 - e13 + e123"
    assert mv(L, "2*e1^e2 + 1") == mv(L, "2*e12") + MultiVector.scalar(L)
    assert mv(L, "e2e1") == mv(L, "-e12")
    assert mv(L, "e11").is_zero()
    assert multivector_from_json(L, {"terms": {"1,2": "3/2", "": "1"}}) == mv(L, "3/2*e12 + 1")
    assert multivector_from_json(L, w.to_json()) == w
    S, _ = catalog.get_algebra("so32")
    assert mv(S, "Jp^Km - Rp") == wedge(mv(S, "Jp"), mv(S, "Km")) - mv(S, "Rp")
    for bad in ("", "e4", "e1 +", "x1"):
        with pytest.raises(ParseError):
            mv(L, bad)


@settings(max_examples=60)
@given(st.sampled_from(CATALOG).flatmap(lambda ref: st.tuples(st.just(ref), st.integers(1, 3), rationals)))
def test_schouten_equals_lambda_power(data):
    ref, m, c = data
    L, _ = algebra_of(ref)
    m = min(m, L.dim)
    rng = np.random.default_rng(abs(hash((ref[0], m))) % 2**32)
    for i in range(L.dim):
        w = MultiVector.from_coords(L, m, [Fraction(int(x)) * c for x in rng.integers(-2, 3, len(blades(L.dim, m)))])
        got = schouten(MultiVector.basis(L, i), w).coords(m)
        assert list(ad_power(L, m)[i].dot(np.array(w.coords(m), dtype=object))) == got


@settings(max_examples=60)
@given(st.sampled_from(CATALOG).flatmap(lambda ref: st.tuples(st.just(ref), st.integers(1, 3), st.integers(0, 100), st.integers(0, 100))))
def test_lambda_power_of_commutator(data):
    ref, m, i, j = data
    L, _ = algebra_of(ref)
    m = min(m, L.dim)
    a, b = L.ad_matrices[i % L.dim], L.ad_matrices[j % L.dim]
    lhs = lambda_power(a.dot(b) - b.dot(a), m).matrix
    A, B = lambda_power(a, m).matrix, lambda_power(b, m).matrix
    assert (lhs == A.dot(B) - B.dot(A)).all()


@settings(max_examples=30)
@given(st.integers(2, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_multiplicative_power_is_minors(m):
    n = len(m)
    T = np.array(m, dtype=object)
    for k in range(n + 1):
        got = lambda_power(T, k, "multiplicative").matrix
        S = sp.Matrix(m)
        bs = list(itertools.combinations(range(n), k))
        for r, I in enumerate(bs):
            for c, J in enumerate(bs):
                want = S.extract(list(I), list(J)).det() if k else 1
                assert got[r, c] == want
