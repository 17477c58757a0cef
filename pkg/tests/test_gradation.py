from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import CATALOG, algebra_of
from lieb import catalog
from lieb.errors import ClosureViolation, GradeOutOfRange, InputError, ModulusViolation
from lieb.exterior import MultiVector, schouten, wedge
from lieb.gradation import (
    gradation_report,
    induced_decomposition,
    limit_degrees,
    load_gradation,
    make_gradation,
    root_check,
    schouten_compatible,
)
from lieb.invariants import invariant_subspace

F = Fraction
ALL_GRADATIONS = [(ref, i) for ref in CATALOG for i in range(len(algebra_of(ref)[1]))]


def gid(x):
    (name, ps), i = x
    return f"{name}{''.join(map(str, ps))}-{i}"


def test_load_examples():
    sl2, _ = catalog.get_algebra("sl2")
    G = load_gradation(sl2, {"group": {"rank": 1}, "degrees": [["0"], ["1"], ["-1"]]})
    assert G.degrees == ((0,), (1,), (-1,))
    su2, _ = catalog.get_algebra("su2")
    G = load_gradation(su2, {"group": {"moduli": [2]}, "degrees": [[0], [1], [1]]})
    assert root_check(su2, G).is_root is False
    h, _ = catalog.get_algebra("h")
    with pytest.raises(ClosureViolation) as exc:
        load_gradation(h, {"group": {"rank": 1}, "degrees": [[1], [2], [4]]})
    assert exc.value.pair == ("e1", "e2") and exc.value.component == "e3"


def test_gradation_input_errors():
    su2, _ = catalog.get_algebra("su2")
    with pytest.raises(ModulusViolation):
        make_gradation(su2, [2], [0, 1, 3])
    with pytest.raises(ModulusViolation):
        make_gradation(su2, [-1], [0, 1, 1])
    with pytest.raises(InputError):
        make_gradation(su2, [2], [0, 1])
    with pytest.raises(InputError):
        load_gradation(su2, {"degrees": [0, 1, 1]})
    with pytest.raises(GradeOutOfRange):
        induced_decomposition(su2, make_gradation(su2, [2], [0, 1, 1]), 4)


def test_so22_bivector_fibers():
    L, (G,) = catalog.get_algebra("so22")
    D = induced_decomposition(L, G, 2)
    dims = {d: len(b) for d, b in D.blades.items()}
    assert len(dims) == 9 and sum(dims.values()) == 15
    for (i, j), n in dims.items():
        assert n == {0: 3, 1: 2, 2: 1}[abs(i) + abs(j)]
    assert sum(len(b) for b in induced_decomposition(L, G, 3).blades.values()) == 20


def test_so32_fibers():
    L, (G,) = catalog.get_algebra("so32")
    D2 = induced_decomposition(L, G, 2)
    assert len(D2.blades) == 21 and D2.total() == 45
    assert induced_decomposition(L, G, 3).total() == 120


def test_trivial_gradation_is_one_fiber():
    L, _ = catalog.get_algebra("sl2")
    G = make_gradation(L, [0], [0, 0, 0])
    D = induced_decomposition(L, G, 2)
    assert list(D.blades) == [(0,)] and D.total() == 3


def test_limit_degrees_so22():
    L, (G,) = catalog.get_algebra("so22")
    lim = sorted(limit_degrees(L, G))
    assert lim == sorted((F(i), F(j)) for i in (-1, 0, 1) for j in (-1, 0, 1) if (i, j) != (0, 0))
    rep = gradation_report(L, G)
    assert rep.is_root and rep.schouten_compatible and len(rep.limit_degrees) == 8


def test_root_examples():
    sl2, (G,) = catalog.get_algebra("sl2")
    assert root_check(sl2, G).is_root
    h, (G,) = catalog.get_algebra("h")
    rc = root_check(h, G)
    assert not rc.is_root and rc.degree_zero == ()


@pytest.mark.parametrize("item", ALL_GRADATIONS, ids=gid)
def test_catalog_root_flags(item):
    (name, ps), i = item
    L, grads = catalog.get_algebra(name, ps)
    assert root_check(L, grads[i]).is_root == catalog.gradation_specs(name, ps)[i]["root"]


@pytest.mark.parametrize("item", ALL_GRADATIONS, ids=gid)
def test_catalog_gradations_are_schouten_compatible(item):
    (name, ps), i = item
    L, grads = catalog.get_algebra(name, ps)
    assert schouten_compatible(L, grads[i], max_grade=2 if L.dim > 6 else 3)


@pytest.mark.parametrize("item", ALL_GRADATIONS, ids=gid)
def test_fibers_partition_the_basis(item):
    (name, ps), i = item
    L, grads = catalog.get_algebra(name, ps)
    from lieb.algebra import binomial

    for m in range(L.dim + 1):
        D = induced_decomposition(L, grads[i], m)
        keys = [k for b in D.blades.values() for k in b]
        assert len(keys) == len(set(keys)) == binomial(L.dim, m)


@pytest.mark.parametrize("item", ALL_GRADATIONS, ids=gid)
def test_root_gradation_consequences(item):
    (name, ps), i = item
    L, grads = catalog.get_algebra(name, ps)
    G = grads[i]
    if not root_check(L, G).is_root:
        return
    zero = G.group.zero()
    for m in range(1, L.dim + 1):
        D = induced_decomposition(L, G, m)
        inside = set(D.blades.get(zero, ()))
        for row in invariant_subspace(L, m).rows:
            w = MultiVector.from_coords(L, m, row)
            assert set(w.terms) <= inside
    g0 = [k for k, d in enumerate(G.degrees) if d == zero]
    for a in g0:
        for b in g0:
            if a < b:
                r = wedge(MultiVector.basis(L, a), MultiVector.basis(L, b))
                assert schouten(r, r).is_zero()


@pytest.mark.parametrize("ref", [r for r in CATALOG if algebra_of(r)[0].dim == 3], ids=lambda r: r[0] + "".join(map(str, r[1])))
def test_three_dimensional_gradations_have_one_top_degree(ref):
    L, grads = algebra_of(ref)
    for G in grads:
        assert len(induced_decomposition(L, G, 3).blades) == 1
