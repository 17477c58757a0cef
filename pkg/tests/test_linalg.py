from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals
from lieb.errors import InputError
from lieb.linalg import Subspace, det, frac, frac_str, matrix_rank, nullspace, rref, solve_in_span


def matrices(rows=st.integers(0, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(rationals, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]).map(
            lambda m: (m, rc[1])
        )
    )


def to_sympy(m, ncols):
    return sp.Matrix(len(m), ncols, lambda i, j: sp.Rational(m[i][j].numerator, m[i][j].denominator))


def test_frac_parsing():
    assert frac("3/2") == Fraction(3, 2)
    assert frac(4) == 4
    assert frac_str(Fraction(-6, 4)) == "-3/2"
    assert frac_str(Fraction(5)) == "5"
    with pytest.raises(InputError):
        frac("x")
    with pytest.raises(InputError):
        frac(0.5)
    with pytest.raises(InputError):
        frac(True)


@settings(max_examples=60)
@given(matrices())
def test_rank_and_rref_match_sympy(mc):
    m, n = mc
    rows, pivots = rref(m, n)
    S = to_sympy(m, n)
    R, piv = S.rref() if m else (sp.zeros(0, n), ())
    assert len(rows) == S.rank() if m else len(rows) == 0
    assert pivots == tuple(piv)
    for i, r in enumerate(rows):
        assert [sp.Rational(x.numerator, x.denominator) for x in r] == list(R.row(i))


@settings(max_examples=60)
@given(matrices())
def test_nullspace_is_kernel(mc):
    m, n = mc
    ns = nullspace(m, n)
    rk = to_sympy(m, n).rank() if m else 0
    assert len(ns) == n - rk
    for v in ns:
        assert all(sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0 for row in m)


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(m):
    n = len(m)
    assert det(m) == to_sympy(m, n).det()
    assert matrix_rank(np.array(m, dtype=object)) == to_sympy(m, n).rank()


def test_subspace_operations():
    a = Subspace.span([[1, 1, 0], [0, 1, 1]], 3)
    b = Subspace.span([[1, 0, 0]], 3)
    assert a.dim == 2
    assert a.contains([1, 2, 1])
    assert not a.contains([1, 0, 0])
    assert (a + b).is_full()
    assert a.intersect(b).is_zero()
    assert a.intersect(Subspace.span([[1, 1, 0]], 3)) == Subspace.span([[2, 2, 0]], 3)
    assert a.coordinates([1, 2, 1]) == (Fraction(1), Fraction(2))  # echelon rows (1,0,-1), (0,1,1)
    assert a.coordinates([1, 0, 0]) is None
    assert a.annihilator().dim == 1
    assert set(a.complement_indices()) | set(a.pivots) == {0, 1, 2}
    assert Subspace.zero(3) <= a
    with pytest.raises(InputError):
        a.contains([1, 2])


def test_solve_in_span():
    assert solve_in_span([[1, 0], [1, 1]], [2, 1]) == [Fraction(1), Fraction(1)]
    assert solve_in_span([[1, 1]], [1, 0]) is None
