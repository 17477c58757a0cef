"""Invariant multivectors, reduced spaces Λ^m g / (Λ^m g)^g with their bracket
and forms, the traceless-ideal bridge and nilpotent generators."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .algebra import LieAlgebra, binomial, ideal_report, structure_report
from .config import DEFAULT_LIMITS, Limits
from .errors import (
    AlgebraMismatch,
    GradeOutOfRange,
    InputError,
    KernelConditionFailed,
    MixedGrade,
    NotDecomposable,
    NotInvariant,
    NotNilpotent,
    NotTracelessIdeal,
    ZeroInput,
)
from .exterior import MultiVector, ad_power, annihilator_span, blade_label, blades, check_grade, schouten, wedge, wedge_all
from .forms import MultiLinearForm, solve_invariant_tensors
from .linalg import ZERO, Subspace, frac, zeros

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def invariant_subspace(L: LieAlgebra, m: int) -> Subspace:
    """(Λ^m g)^g as the common kernel of the Λ^m-derivations of ad_{e_i}."""
    check_grade(L, m)
    N = binomial(L.dim, m)
    rows = [list(M[r, :]) for M in ad_power(L, m) for r in range(N)]
    return Subspace.kernel(rows, N, f"Λ^{m}")


def is_invariant(w: MultiVector) -> bool:
    L = w.algebra
    return all(schouten(MultiVector.basis(L, i), w).is_zero() for i in range(L.dim))


@dataclass(frozen=True, eq=False)
class ReducedSpace:
    """Λ^m_R g with coset representatives spanned by the non-pivot unit vectors of I."""

    algebra: LieAlgebra
    grade: int
    invariants: Subspace

    @cached_property
    def complement(self) -> tuple[int, ...]:
        return self.invariants.complement_indices()

    @property
    def dim(self) -> int:
        return len(self.complement)

    @property
    def ambient(self) -> int:
        return self.invariants.ambient

    def labels(self) -> list[str]:
        bs = blades(self.algebra.dim, self.grade)
        return [f"[{blade_label(self.algebra, bs[j])}]" for j in self.complement]

    def project_coords(self, v: Sequence) -> tuple[Fraction, ...]:
        res = self.invariants.residue(v)
        return tuple(res.get(j, ZERO) for j in self.complement)

    def project(self, w: MultiVector) -> ReducedClass:
        if w.algebra != self.algebra:
            raise AlgebraMismatch("multivector over a different algebra")
        if w.terms and w.grades() != {self.grade}:
            raise MixedGrade(f"expected grade {self.grade}, got {sorted(w.grades())}")
        return ReducedClass(self, self.project_coords(w.coords(self.grade)))

    def lift_coords(self, coords: Sequence) -> list[Fraction]:
        v = [ZERO] * self.ambient
        for j, c in zip(self.complement, coords):
            v[j] = frac(c)
        return v

    def lift(self, cls: ReducedClass | Sequence) -> MultiVector:
        coords = cls.coords if isinstance(cls, ReducedClass) else cls
        return MultiVector.from_coords(self.algebra, self.grade, self.lift_coords(coords))

    def cls(self, coords: Sequence) -> ReducedClass:
        return ReducedClass(self, tuple(frac(c) for c in coords))

    @cached_property
    def projection_matrix(self) -> np.ndarray:
        P = zeros(self.dim, self.ambient)
        for j in range(self.ambient):
            unit = [ZERO] * self.ambient
            unit[j] = Fraction(1)
            for r, x in enumerate(self.project_coords(unit)):
                P[r, j] = x
        return P

    @cached_property
    def action_matrices(self) -> tuple[np.ndarray, ...]:
        """Matrices of [v] ↦ [[e_i, v]_S] on complement coordinates."""
        P = self.projection_matrix
        cols = list(self.complement)
        return tuple(P.dot(M[:, cols]) if self.dim else zeros(0, 0) for M in ad_power(self.algebra, self.grade))


@dataclass(frozen=True)
class ReducedClass:
    space: ReducedSpace
    coords: tuple[Fraction, ...]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReducedClass)
            and self.space.algebra == other.space.algebra
            and self.space.grade == other.space.grade
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.space.grade, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def lift(self) -> MultiVector:
        return self.space.lift(self)


@lru_cache(maxsize=None)
def reduced_space(L: LieAlgebra, m: int) -> ReducedSpace:
    return ReducedSpace(L, m, invariant_subspace(L, m))


def reduced_schouten(Rp: ReducedSpace, Rq: ReducedSpace, a, b) -> ReducedClass:
    """[[w_p],[w_q]]_R = [[w_p, w_q]_S]: lift, bracket, project."""
    if Rp.algebra != Rq.algebra:
        raise AlgebraMismatch("reduced spaces over different algebras")
    L = Rp.algebra
    g = Rp.grade + Rq.grade - 1
    if not 0 <= g <= L.dim:
        raise GradeOutOfRange(f"bracket grade {g} outside 0..{L.dim}")
    wa = Rp.lift(a) if not isinstance(a, MultiVector) else a
    wb = Rq.lift(b) if not isinstance(b, MultiVector) else b
    R = reduced_space(L, g)
    return ReducedClass(R, R.project_coords(schouten(wa, wb).coords(g)))


def reduced_form(R: ReducedSpace, b: MultiLinearForm) -> MultiLinearForm:
    """b_R([w_1],..,[w_k]) = b(w_1,..,w_k), defined when I lies in every slot's kernel."""
    if b.dim != R.ambient:
        raise InputError("form does not act on the reduced space's module")
    for x in R.invariants.rows:
        xv = np.array(x, dtype=object)
        for s in range(b.arity):
            contracted = np.tensordot(b.tensor, xv, axes=([s], [0]))
            if any(y != 0 for y in np.ravel(contracted)):
                raise KernelConditionFailed(f"invariant vector is not in the kernel of slot {s + 1}")
    comp = list(R.complement)
    sub = b.tensor[np.ix_(*([comp] * b.arity))] if comp else zeros(*([0] * b.arity))
    return MultiLinearForm(b.arity, b.grade, sub, b.symmetry)


def reduced_invariant_forms(R: ReducedSpace, k: int, symmetry: str = "none", limits: Limits = DEFAULT_LIMITS) -> Subspace:
    return solve_invariant_tensors(R.action_matrices, R.dim, k, symmetry, limits)


def reduced_action_table(R: ReducedSpace) -> list[dict]:
    """Per basis vector e_i: reduced image and kernel of [v] ↦ [[e_i, v]_S], plus the kernel
    of the unprojected map restricted to the coset representatives."""
    L = R.algebra
    cols = list(R.complement)
    out = []
    for i, (A, M) in enumerate(zip(R.action_matrices, ad_power(L, R.grade))):
        img = Subspace.span([list(A[:, c]) for c in range(R.dim)], R.dim, "Λ_R")
        ker = Subspace.kernel([list(A[r, :]) for r in range(R.dim)], R.dim, "Λ_R")
        lifted = M[:, cols]
        ker_rep = Subspace.kernel([list(lifted[r, :]) for r in range(lifted.shape[0])], R.dim, "Λ_R")
        out.append({"vector": L.basis[i], "image": img, "kernel": ker, "representative_kernel": ker_rep})
    return out


class BridgeCertificate(NamedTuple):
    ideal: Subspace
    omega: MultiVector
    is_ideal: bool
    is_traceless: bool
    is_invariant: bool
    is_decomposable: bool


def _unit_mv(L: LieAlgebra, row) -> MultiVector:
    return MultiVector.from_coords(L, 1, row)


def ideal_invariant_bridge(L: LieAlgebra, x) -> tuple[object, BridgeCertificate]:
    """Traceless ideal h -> top wedge of its echelon basis; decomposable invariant -> its factor ideal."""
    if isinstance(x, Subspace):
        rep = ideal_report(L, x)
        if not rep.is_traceless_ideal:
            raise NotTracelessIdeal("input is not a traceless ideal")
        omega = wedge_all(L, (_unit_mv(L, r) for r in x.rows))
        inv = is_invariant(omega)
        if not inv:
            raise NotInvariant("top wedge of the ideal is not invariant")
        return omega, BridgeCertificate(x, omega, True, True, inv, True)
    if isinstance(x, MultiVector):
        if x.is_zero():
            raise ZeroInput("zero multivector")
        if not x.is_homogeneous():
            raise MixedGrade("invariant must be homogeneous")
        if not is_invariant(x):
            raise NotInvariant("multivector is not invariant")
        span, dec = annihilator_span(x)
        if not dec:
            raise NotDecomposable("multivector is not decomposable")
        rep = ideal_report(L, span)
        return span, BridgeCertificate(span, x, rep.is_ideal, rep.is_traceless_ideal, True, True)
    raise InputError("bridge input must be a Subspace of g or a MultiVector")


class NilpotentGenerator(NamedTuple):
    grade: int
    space: Subspace
    rule: str


def _wedge_span(L: LieAlgebra, factors: Sequence[Subspace]) -> Subspace:
    m = len(factors)
    vecs = []

    def go(i, acc):
        if i == m:
            vecs.append(acc.coords(m))
            return
        for r in factors[i].rows:
            go(i + 1, wedge(acc, _unit_mv(L, r)))

    go(0, MultiVector.scalar(L))
    return Subspace.span(vecs, binomial(L.dim, m), f"Λ^{m}")


def nilpotent_invariant_generators(L: LieAlgebra) -> list[NilpotentGenerator]:
    rep = structure_report(L)
    if not rep.nilpotent:
        raise NotNilpotent(f"{L.name} is not nilpotent")
    lc = rep.lower_central  # g_{0)} .. g_{p)} = 0
    p = len(lc) - 1
    z = rep.center
    n = L.dim
    out: list[NilpotentGenerator] = []
    if p <= 1:
        log.info("abelian algebra: every multivector is invariant")
        for m in (2, 3):
            if m <= n:
                out.append(NilpotentGenerator(m, Subspace.full(binomial(n, m), f"Λ^{m}"), "abelian"))
        return out
    g2 = lc[p - 2]
    if z.dim == 1:
        out.append(NilpotentGenerator(2, _wedge_span(L, [z, g2]), "z ∧ g_(p-2)"))
        log.info("fired: dim z = 1, z ∧ g_(p-2) in (Λ²g)^g")
    if n >= 3:
        if z.dim == 2:
            out.append(NilpotentGenerator(3, _wedge_span(L, [z, z, g2]), "Λ²z ∧ g_(p-2)"))
            log.info("fired: Λ³ case 1 (dim z = 2)")
        elif z.dim == 1 and g2.dim > 1:
            out.append(NilpotentGenerator(3, _wedge_span(L, [z, g2, g2]), "z ∧ Λ²g_(p-2)"))
            log.info("fired: Λ³ case 2 (dim z = 1, dim g_(p-2) > 1)")
        elif z.dim == 1 and g2.dim == 1:
            if p >= 3:
                out.append(NilpotentGenerator(3, _wedge_span(L, [z, g2, lc[p - 3]]), "z ∧ g_(p-2) ∧ g_(p-3)"))
                log.info("fired: Λ³ case 3")
            else:
                log.info("skipped Λ³ case 3: g_(p-3) undefined for p = %d", p)
        else:
            log.info("no Λ³ case applies (dim z = %d)", z.dim)
    for gen in out:
        if not gen.space.issubspace(invariant_subspace(L, gen.grade)):
            raise NotInvariant(f"generator {gen.rule} is not invariant")
    return out
