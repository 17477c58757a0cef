from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CATALOG, algebra_of, homogeneous, rationals
from lieb import catalog
from lieb.algebra import binomial, derivation_algebra, killing_form, load_algebra, matrix_from_flat
from lieb.errors import (
    AlgebraMismatch,
    KernelConditionFailed,
    NotDecomposable,
    NotInvariant,
    NotNilpotent,
    NotTracelessIdeal,
)
from lieb.exterior import MultiVector, lambda_power, parse_multivector, wedge
from lieb.forms import MultiLinearForm, extend_form
from lieb.gradation import induced_decomposition
from lieb.invariants import (
    ideal_invariant_bridge,
    invariant_subspace,
    is_invariant,
    nilpotent_invariant_generators,
    reduced_form,
    reduced_invariant_forms,
    reduced_schouten,
    reduced_space,
)
from lieb.linalg import Subspace

H4 = load_algebra({"name": "h4", "basis": ["e1", "e2", "e3", "e4"], "brackets": [{"i": 1, "j": 2, "result": {"3": "1"}}]})
AB3 = load_algebra({"name": "ab3", "basis": ["e1", "e2", "e3"], "brackets": []})


def span(L, m, *texts):
    return Subspace.span([parse_multivector(L, t).coords(m) for t in texts], binomial(L.dim, m))


def rid(r):
    return r[0] + "".join(map(str, r[1]))


@pytest.mark.parametrize("ref", CATALOG, ids=rid)
def test_invariants_match_sympy(ref):
    L, _ = algebra_of(ref)
    C = oracles.structure(L)
    for m in range(1, min(L.dim, 3 if L.dim <= 6 else 2) + 1):
        want = oracles.invariant_rref(C, L.dim, m)
        got = invariant_subspace(L, m)
        assert got.dim == want.rows
        rows = [[sp.Rational(x.numerator, x.denominator) for x in r] for r in got.rows]
        assert rows == want.tolist()


def test_invariant_examples():
    sl2, _ = catalog.get_algebra("sl2")
    assert invariant_subspace(sl2, 2).dim == 0
    assert invariant_subspace(sl2, 3).is_full()
    h, _ = catalog.get_algebra("h")
    # [e1, e12]_S = e13, so e12 is not invariant; the invariant plane is z ^ h = <e13, e23>
    assert invariant_subspace(h, 2) == span(h, 2, "e13", "e23")
    assert not is_invariant(parse_multivector(h, "e12"))


def test_reduced_space_examples():
    r, _ = catalog.get_algebra("r3_m1")
    R = reduced_space(r, 2)
    assert R.invariants == span(r, 2, "e23") and R.labels() == ["[e12]", "[e13]"]
    r0, _ = catalog.get_algebra("r3_0p")
    assert reduced_space(r0, 2).invariants == span(r0, 2, "e23")
    sl2, _ = catalog.get_algebra("sl2")
    R = reduced_space(sl2, 2)
    assert R.dim == 3 and R.invariants.dim == 0


def test_reduced_schouten_examples():
    r0, _ = catalog.get_algebra("r3_0p")
    R1, R2 = reduced_space(r0, 1), reduced_space(r0, 2)
    c = reduced_schouten(R1, R2, R1.project(parse_multivector(r0, "e1")), R2.project(parse_multivector(r0, "e12")))
    assert not c.is_zero()
    assert c == R2.project(parse_multivector(r0, "-e13"))  # e1 ^ [e1, e2] = -e13
    h, _ = catalog.get_algebra("h")
    H1, H2 = reduced_space(h, 1), reduced_space(h, 2)
    c = reduced_schouten(H1, H2, H1.project(parse_multivector(h, "e1")), H2.project(parse_multivector(h, "e23")))
    assert c.is_zero()
    sl2, _ = catalog.get_algebra("sl2")
    with pytest.raises(AlgebraMismatch):
        reduced_schouten(H1, reduced_space(sl2, 2), H1.cls([1, 0, 0]), reduced_space(sl2, 2).cls([1, 0, 0]))


def test_reduced_bracket_with_invariant_vanishes():
    for name in ("r3_m1", "r3_0p", "h"):
        L, _ = catalog.get_algebra(name)
        R2 = reduced_space(L, 2)
        for inv in invariant_subspace(L, 2).rows:
            w = MultiVector.from_coords(L, 2, inv)
            for v in ("e1", "e2", "e3"):
                assert reduced_schouten(reduced_space(L, 1), R2, parse_multivector(L, v), w).is_zero()


def test_reduced_form_families():
    r, _ = catalog.get_algebra("r3_m1")
    fam = reduced_invariant_forms(reduced_space(r, 2), 2, "symmetric")
    assert fam == Subspace.span([[0, 1, 1, 0]], 4)
    r0, _ = catalog.get_algebra("r3_0p")
    fam = reduced_invariant_forms(reduced_space(r0, 2), 2, "symmetric")
    assert fam == Subspace.span([[1, 0, 0, 1]], 4)
    R = reduced_space(r, 2)
    zero = MultiLinearForm(2, 2, np.zeros((3, 3), dtype=object) * Fraction(0))
    assert reduced_form(R, zero).is_zero()
    sl2, _ = catalog.get_algebra("sl2")
    with pytest.raises(KernelConditionFailed):
        h, _ = catalog.get_algebra("h")
        reduced_form(reduced_space(h, 2), MultiLinearForm(2, 2, np.eye(3, dtype=int).astype(object)))


def test_reduced_form_of_lifted_family_agrees():
    r, _ = catalog.get_algebra("r3_m1")
    R = reduced_space(r, 2)
    # b = e12* (x) e13* + e13* (x) e12*, which kills e23
    t = np.zeros((3, 3), dtype=object) * Fraction(0)
    t[0, 1] = t[1, 0] = Fraction(1)
    b = MultiLinearForm(2, 2, t, "symmetric")
    assert (reduced_form(R, b).tensor == np.array([[0, 1], [1, 0]], dtype=object)).all()


def test_bridge_examples():
    r, _ = catalog.get_algebra("r3_m1")
    omega, cert = ideal_invariant_bridge(r, span(r, 1, "e2", "e3"))
    assert omega == parse_multivector(r, "e23") and cert.is_invariant
    h, _ = catalog.get_algebra("h")
    ideal, cert = ideal_invariant_bridge(h, parse_multivector(h, "e13"))
    assert ideal == span(h, 1, "e1", "e3") and cert.is_traceless
    sl2, _ = catalog.get_algebra("sl2")
    omega, _ = ideal_invariant_bridge(sl2, Subspace.full(3))
    assert omega == parse_multivector(sl2, "e123")
    r31, _ = catalog.get_algebra("r3_1")
    with pytest.raises(NotTracelessIdeal):
        ideal_invariant_bridge(r31, span(r31, 1, "e2", "e3"))
    with pytest.raises(NotInvariant):
        ideal_invariant_bridge(h, parse_multivector(h, "e12"))
    ab4 = load_algebra({"basis": ["e1", "e2", "e3", "e4"], "brackets": []})
    with pytest.raises(NotDecomposable):
        ideal_invariant_bridge(ab4, parse_multivector(ab4, "e12 + e34"))


def test_nilpotent_generators():
    h, _ = catalog.get_algebra("h")
    (gen,) = [g for g in nilpotent_invariant_generators(h) if g.grade == 2]
    assert gen.space == span(h, 2, "e13", "e23") == invariant_subspace(h, 2)
    gens = nilpotent_invariant_generators(AB3)
    assert all(g.space.is_full() for g in gens)
    gens = nilpotent_invariant_generators(H4)
    (g3,) = [g for g in gens if g.grade == 3]
    assert g3.rule.startswith("Λ²z") and g3.space <= invariant_subspace(H4, 3)
    sl2, _ = catalog.get_algebra("sl2")
    with pytest.raises(NotNilpotent):
        nilpotent_invariant_generators(sl2)


@pytest.mark.parametrize("ref", CATALOG, ids=rid)
def test_invariants_closed_under_wedge(ref):
    L, _ = algebra_of(ref)
    top = 3 if L.dim <= 6 else 2
    for p in range(1, top + 1):
        for q in range(1, top + 1 - p + 1):
            if p + q > L.dim:
                continue
            for a in invariant_subspace(L, p).rows:
                for b in invariant_subspace(L, q).rows:
                    w = wedge(MultiVector.from_coords(L, p, a), MultiVector.from_coords(L, q, b))
                    assert invariant_subspace(L, p + q).contains(w.coords(p + q))


@pytest.mark.parametrize("ref", CATALOG, ids=rid)
def test_derivations_preserve_invariants(ref):
    L, _ = algebra_of(ref)
    der, _ = derivation_algebra(L)
    for m in range(1, min(L.dim, 3) + 1):
        I = invariant_subspace(L, m)
        for d in der.rows:
            D = lambda_power(matrix_from_flat(d, L.dim), m).matrix
            for r in I.rows:
                assert I.contains(list(D.dot(np.array(r, dtype=object))))


@pytest.mark.parametrize("ref", CATALOG, ids=rid)
def test_graded_splitting_of_invariants(ref):
    L, grads = algebra_of(ref)
    for G in grads:
        for m in range(1, min(L.dim, 3) + 1):
            I = invariant_subspace(L, m)
            D = induced_decomposition(L, G, m)
            for r in I.rows:
                w = MultiVector.from_coords(L, m, r)
                for keys in D.blades.values():
                    part = MultiVector(L, {k: c for k, c in w.terms.items() if k in keys})
                    assert I.contains(part.coords(m))


def test_so22_degree_zero_blocks_nondegenerate():
    from lieb.linalg import det

    L, (G,) = catalog.get_algebra("so22")
    K = killing_form(L)
    for m in range(1, L.dim + 1):
        B = extend_form(K, m).tensor
        D = induced_decomposition(L, G, m)
        pos = {k: i for i, k in enumerate(sorted(k for b in D.blades.values() for k in b))}
        for a, keys in D.blades.items():
            neg = tuple(-x for x in a)
            idx = [pos[k] for k in keys] + ([pos[k] for k in D.blades.get(neg, ())] if neg != a else [])
            assert det(B[np.ix_(idx, idx)]) != 0


@settings(max_examples=60)
@given(st.sampled_from(["r3_m1", "r3_0p", "h", "so22"]).flatmap(
    lambda n: st.tuples(st.just(n), homogeneous(catalog.get_algebra(n)[0], 1), homogeneous(catalog.get_algebra(n)[0], 2),
                        st.lists(rationals, min_size=2, max_size=2))))
def test_reduced_schouten_is_representative_independent(data):
    name, v, w, cs = data
    L, _ = catalog.get_algebra(name)
    R1, R2 = reduced_space(L, 1), reduced_space(L, 2)
    base = reduced_schouten(R1, R2, v, w)
    I = invariant_subspace(L, 2)
    shift = MultiVector(L)
    for c, r in zip(cs, I.rows):
        shift = shift + MultiVector.from_coords(L, 2, r) * c
    I1 = invariant_subspace(L, 1)
    vshift = MultiVector(L)
    for c, r in zip(cs, I1.rows):
        vshift = vshift + MultiVector.from_coords(L, 1, r) * c
    assert reduced_schouten(R1, R2, v + vshift, w + shift) == base
