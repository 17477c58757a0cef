"""Yang-Baxter residuals, r-matrix certificates, cocommutators, orbit dimensions,
quadratic separators and the (reduced) Chevalley-Eilenberg differential."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .algebra import LieAlgebra, binomial
from .errors import (
    ArityMismatch,
    DegreeOverflow,
    GradeMismatch,
    InputError,
    JacobiViolation,
    MathFailure,
    MixedGrade,
)
from .exterior import MultiVector, ad_power, blade_index, blades, schouten, sort_sign
from .forms import MultiLinearForm
from .invariants import ReducedClass, ReducedSpace, invariant_subspace
from .linalg import ZERO, frac, matrix_rank, zeros


def _require_bivector(r: MultiVector) -> None:
    if r.terms and r.grades() != {2}:
        raise GradeMismatch(f"expected a bivector, got grades {sorted(r.grades())}")


def mcybe_residual(L: LieAlgebra, r: MultiVector) -> MultiVector:
    """[r, r]_S."""
    _require_bivector(r)
    return schouten(r, r)


@dataclass(frozen=True)
class RMatrixVerdict:
    residual: MultiVector
    is_cybe: bool
    is_mcybe: bool
    witness: tuple[Fraction, ...] | None  # coordinates in the echelon basis of (Λ³g)^g


def certify_r(L: LieAlgebra, r: MultiVector) -> RMatrixVerdict:
    res = mcybe_residual(L, r)
    if L.dim < 3:
        return RMatrixVerdict(res, True, True, ())
    inv = invariant_subspace(L, 3)
    w = inv.coordinates(res.coords(3))
    return RMatrixVerdict(res, res.is_zero(), w is not None, w)


def cocommutator(L: LieAlgebra, r: MultiVector) -> np.ndarray:
    """C(n,2) x n matrix whose column i holds δ_r(e_i) = [e_i, r]_S."""
    _require_bivector(r)
    N = binomial(L.dim, 2)
    out = zeros(N, L.dim)
    for i in range(L.dim):
        col = schouten(MultiVector.basis(L, i), r).coords(2)
        for a, x in enumerate(col):
            out[a, i] = x
    return out


def _delta_of(L: LieAlgebra, delta: np.ndarray, v: Sequence) -> MultiVector:
    return MultiVector.from_coords(L, 2, list(delta.dot(np.array(list(v), dtype=object))))


def cocycle_holds(L: LieAlgebra, delta: np.ndarray) -> bool:
    """δ([e_i,e_j]) = [e_i, δ(e_j)]_S + [δ(e_i), e_j]_S on every basis pair."""
    n = L.dim
    for i, j in itertools.combinations(range(n), 2):
        ei, ej = MultiVector.basis(L, i), MultiVector.basis(L, j)
        di = MultiVector.from_coords(L, 2, list(delta[:, i]))
        dj = MultiVector.from_coords(L, 2, list(delta[:, j]))
        lhs = _delta_of(L, delta, L.bracket(ei.coords(1), ej.coords(1)))
        if lhs != schouten(ei, dj) + schouten(di, ej):
            return False
    return True


def dual_bracket_is_lie(L: LieAlgebra, delta: np.ndarray) -> bool:
    """Whether the transpose of δ satisfies the Jacobi identity on g*."""
    n = L.dim
    brackets = {}
    for a, (p, q) in enumerate(blades(n, 2)):
        res = {i: delta[a, i] for i in range(n) if delta[a, i]}
        if res:
            brackets[(p, q)] = res
    try:
        LieAlgebra(f"{L.name}*", [f"x{i}" for i in range(n)], brackets)
    except JacobiViolation:
        return False
    return True


def is_cocommutator(L: LieAlgebra, delta: np.ndarray) -> bool:
    return cocycle_holds(L, delta) and dual_bracket_is_lie(L, delta)


def same_coproduct(L: LieAlgebra, r1: MultiVector, r2: MultiVector) -> bool:
    """δ_{r1} = δ_{r2}, decided by invariance of r1 - r2 and cross-checked on matrices."""
    _require_bivector(r1)
    _require_bivector(r2)
    flag = invariant_subspace(L, 2).contains((r1 - r2).coords(2))
    direct = bool((cocommutator(L, r1) == cocommutator(L, r2)).all())
    if flag != direct:
        raise MathFailure("membership test and cocommutator comparison disagree")
    return flag


def orbit_dimension(L: LieAlgebra, w: MultiVector) -> int:
    """rank of v ↦ [v, w]_S."""
    if not w.is_homogeneous():
        raise MixedGrade(f"element has grades {sorted(w.grades())}")
    if w.is_zero():
        return 0
    m = w.grade()
    cols = [schouten(MultiVector.basis(L, i), w).coords(m) for i in range(L.dim)]
    return matrix_rank(np.array(cols, dtype=object))


def reduced_orbit_dimension(R: ReducedSpace, c: ReducedClass | Sequence) -> int:
    """rank of v ↦ [[v], c]_R."""
    coords = c.coords if isinstance(c, ReducedClass) else tuple(frac(x) for x in c)
    if not R.dim:
        return 0
    v = np.array(list(coords), dtype=object)
    cols = [list(A.dot(v)) for A in R.action_matrices]
    return matrix_rank(np.array(cols, dtype=object))


def quadratic_separator(L: LieAlgebra, b: MultiLinearForm, r: MultiVector) -> Fraction:
    """b(r, r) for a bilinear form b on Λ²g."""
    if b.arity != 2:
        raise ArityMismatch(f"expected a bilinear form, got arity {b.arity}")
    if b.dim != binomial(L.dim, 2):
        raise ArityMismatch("form is not defined on Λ²g")
    _require_bivector(r)
    v = r.coords(2)
    return b(v, v)


@dataclass(frozen=True)
class Cochain:
    """Map from increasing q-tuples of basis indices of g to vectors of a g-module.

    The module is Λ²g (reduced=False) or Λ²_R g in complement coordinates (reduced=True).
    """

    degree: int
    module_dim: int
    values: Mapping[tuple[int, ...], tuple[Fraction, ...]] = field(default_factory=dict)
    reduced: bool = False

    def __post_init__(self):
        clean = {}
        for k, v in self.values.items():
            k = tuple(k)
            if len(k) != self.degree or list(k) != sorted(set(k)):
                raise InputError(f"cochain key {k} is not a strictly increasing {self.degree}-tuple")
            v = tuple(frac(x) for x in v)
            if len(v) != self.module_dim:
                raise InputError("cochain value has the wrong module dimension")
            if any(v):
                clean[k] = v
        object.__setattr__(self, "values", clean)

    def __call__(self, key: Sequence[int]) -> tuple[Fraction, ...]:
        return self.values.get(tuple(key), (ZERO,) * self.module_dim)

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and (self.degree, self.module_dim, self.reduced) == (other.degree, other.module_dim, other.reduced)
            and self.values == other.values
        )


def _module(L: LieAlgebra, R: ReducedSpace | None):
    if R is None:
        return binomial(L.dim, 2), ad_power(L, 2)
    if R.algebra != L or R.grade != 2:
        raise InputError("reduced space must be Λ²_R of the same algebra")
    return R.dim, R.action_matrices


def ce_differential(L: LieAlgebra, R: ReducedSpace | None, c: Cochain) -> Cochain:
    """(dc)(v_1..v_{q+1}) = Σ (-1)^{i+1} v_i·c(..^v_i..) + Σ_{p<q} (-1)^{p+q} c([v_p,v_q], ..^v_p..^v_q..)."""
    N, rho = _module(L, R)
    if c.module_dim != N or c.reduced != (R is not None):
        raise InputError("cochain does not live in the requested module")
    n = L.dim
    q = c.degree
    if q > n:
        raise DegreeOverflow(f"cochain degree {q} exceeds dim g = {n}")
    out = {}
    for I in itertools.combinations(range(n), q + 1):
        acc = [ZERO] * N
        for i, vi in enumerate(I):
            val = c(I[:i] + I[i + 1 :])
            if any(val):
                col = rho[vi].dot(np.array(val, dtype=object))
                s = -1 if i % 2 else 1
                for a in range(N):
                    acc[a] += s * col[a]
        for p, qq in itertools.combinations(range(q + 1), 2):
            rest = I[:p] + I[p + 1 : qq] + I[qq + 1 :]
            s0 = -1 if (p + qq) % 2 else 1
            for k, x in L.bracket_basis(I[p], I[qq]).items():
                s1, key = sort_sign((k,) + rest)
                if not s1:
                    continue
                val = c(key)
                for a in range(N):
                    if val[a]:
                        acc[a] += s0 * s1 * x * val[a]
        if any(acc):
            out[I] = tuple(acc)
    return Cochain(q + 1, N, out, c.reduced)


def cochain_of_bivector(L: LieAlgebra, r: MultiVector, R: ReducedSpace | None = None) -> Cochain:
    """Degree-0 cochain 1 ⊗ r (or 1 ⊗ [r])."""
    _require_bivector(r)
    if R is None:
        return Cochain(0, binomial(L.dim, 2), {(): r.coords(2)})
    return Cochain(0, R.dim, {(): R.project(r).coords}, True)


def project_cochain(R: ReducedSpace, c: Cochain) -> Cochain:
    """(id ⊗ π) c."""
    if c.reduced or c.module_dim != R.ambient:
        raise InputError("expected an unreduced Λ² cochain")
    return Cochain(c.degree, R.dim, {k: R.project_coords(v) for k, v in c.values.items()}, True)


def residual_grid(L: LieAlgebra, points: Sequence[Sequence]) -> list[dict]:
    """Residual coordinates of r = Σ x_a e_a (canonical Λ² basis) at each point."""
    bi = blade_index(L.dim, 3)
    out = []
    for pt in points:
        r = MultiVector.from_coords(L, 2, [frac(x) for x in pt])
        res = mcybe_residual(L, r)
        out.append({"point": [frac(x) for x in pt], "residual": [res.terms.get(b, ZERO) for b in bi]})
    return out
