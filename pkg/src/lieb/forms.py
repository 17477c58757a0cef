"""Invariant multilinear forms on Λ^m g, their extension from g to Λg, and
Casimir-induced forms."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algebra import LieAlgebra, _perm_sign, binomial, killing_form
from .config import DEFAULT_LIMITS, Limits
from .errors import ArityGradeMismatch, BoundExceeded, InputError
from .exterior import ad_power, blades, check_grade
from .linalg import ZERO, Echelon, Subspace, det, frac, zeros

SYMMETRIES = ("none", "symmetric", "antisymmetric")


def _adjacent_swaps(k: int):
    for s in range(k - 1):
        p = list(range(k))
        p[s], p[s + 1] = p[s + 1], p[s]
        yield tuple(p)


def has_symmetry(t: np.ndarray, symmetry: str) -> bool:
    if symmetry == "none" or t.ndim < 2:
        return True
    sg = 1 if symmetry == "symmetric" else -1
    return all(bool((t == sg * t.transpose(p)).all()) for p in _adjacent_swaps(t.ndim))


@dataclass(frozen=True, eq=False)
class MultiLinearForm:
    """k-linear form on a module, stored as a dense rank-k tensor (grade m records Λ^m)."""

    arity: int
    grade: int
    tensor: np.ndarray
    symmetry: str = "none"

    def __post_init__(self):
        t = self.tensor
        if not isinstance(t, np.ndarray):
            t = np.array(t, dtype=object)
            object.__setattr__(self, "tensor", t)
        if self.symmetry not in SYMMETRIES:
            raise InputError(f"unknown symmetry tag {self.symmetry!r}")
        if t.ndim != self.arity:
            raise ArityGradeMismatch(f"tensor of rank {t.ndim} declared with arity {self.arity}")
        if len(set(t.shape)) > 1:
            raise InputError(f"all tensor axes must have equal length, got {t.shape}")
        if not has_symmetry(t, self.symmetry):
            raise InputError(f"tensor is not {self.symmetry}")

    @property
    def dim(self) -> int:
        return self.tensor.shape[0] if self.arity else 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiLinearForm)
            and self.arity == other.arity
            and self.tensor.shape == other.tensor.shape
            and bool((self.tensor == other.tensor).all())
        )

    def __call__(self, *vectors: Sequence) -> Fraction:
        if len(vectors) != self.arity:
            raise InputError(f"form takes {self.arity} arguments")
        t = self.tensor
        for v in vectors:
            t = np.tensordot(np.array(list(v), dtype=object), t, axes=([0], [0]))
        return frac(t) if not isinstance(t, np.ndarray) else frac(t.item())

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.tensor.flat)

    def scaled(self, c) -> MultiLinearForm:
        return MultiLinearForm(self.arity, self.grade, self.tensor * frac(c), self.symmetry)

    def flat(self) -> list[Fraction]:
        return [frac(x) for x in self.tensor.flat]


def form_from_flat(vec: Sequence, N: int, k: int, m: int, symmetry: str = "none") -> MultiLinearForm:
    t = zeros(*([N] * k))
    for i, x in enumerate(vec):
        t.flat[i] = frac(x)
    return MultiLinearForm(k, m, t, symmetry)


def apply_on_slot(t: np.ndarray, rho: np.ndarray, s: int) -> np.ndarray:
    """T'[.., x_s, ..] = T[.., rho x_s, ..] = sum_y rho[y, x_s] T[.., y, ..]."""
    r = np.tensordot(t, rho, axes=([s], [0]))
    return np.moveaxis(r, -1, s)


def is_invariant_tensor(t: np.ndarray, rhos: Sequence[np.ndarray]) -> bool:
    """Check sum_s b(x_1, .., rho_v x_s, .., x_k) = 0 for every generator v."""
    for rho in rhos:
        total = zeros(*t.shape)
        for s in range(t.ndim):
            total = total + apply_on_slot(t, rho, s)
        if any(x != 0 for x in total.flat):
            return False
    return True


def is_invariant_form(L: LieAlgebra, b: MultiLinearForm) -> bool:
    check_grade(L, b.grade)
    if b.dim != binomial(L.dim, b.grade):
        raise InputError("form size does not match Λ^m g")
    return is_invariant_tensor(b.tensor, ad_power(L, b.grade))


def solve_invariant_tensors(
    rhos: Sequence[np.ndarray], N: int, k: int, symmetry: str = "none", limits: Limits = DEFAULT_LIMITS
) -> Subspace:
    """Solution space of the invariance equations for a module given by matrices rhos."""
    if symmetry not in SYMMETRIES:
        raise InputError(f"unknown symmetry {symmetry!r}")
    if k < 1:
        raise InputError("arity must be >= 1")
    size = N**k
    if size > limits.max_tensor_entries:
        raise BoundExceeded(f"form tensor with {size} entries exceeds bound {limits.max_tensor_entries}")
    strides = [N ** (k - 1 - s) for s in range(k)]
    e = Echelon(size)
    # symmetry constraints first: they are short and prune the system early
    if symmetry != "none" and k > 1:
        sg = -1 if symmetry == "symmetric" else 1
        for idx in itertools.product(range(N), repeat=k):
            a = sum(i * st for i, st in zip(idx, strides))
            for p in _adjacent_swaps(k):
                b = sum(idx[p[s]] * strides[s] for s in range(k))
                if a == b:
                    if symmetry == "antisymmetric":
                        e.add({a: Fraction(1)})
                    continue
                e.add({a: Fraction(1), b: Fraction(sg)})
    cols = [[{y: x for y in range(N) if (x := rho[y, c])} for c in range(N)] for rho in rhos]
    for col in cols:
        for idx in itertools.product(range(N), repeat=k):
            base = sum(i * st for i, st in zip(idx, strides))
            row: dict[int, Fraction] = {}
            for s in range(k):
                off = base - idx[s] * strides[s]
                for y, x in col[idx[s]].items():
                    j = off + y * strides[s]
                    row[j] = row.get(j, ZERO) + x
            row = {j: x for j, x in row.items() if x}
            if row:
                e.add(row)
    return Subspace.span(e.nullspace(), size, f"forms(k={k})")


def invariant_forms(
    L: LieAlgebra, m: int, k: int, symmetry: str = "none", limits: Limits = DEFAULT_LIMITS
) -> Subspace:
    check_grade(L, m)
    N = binomial(L.dim, m)
    return solve_invariant_tensors(ad_power(L, m), N, k, symmetry, limits)


def forms_basis(space: Subspace, N: int, k: int, m: int, symmetry: str = "none") -> list[MultiLinearForm]:
    return [form_from_flat(r, N, k, m, symmetry) for r in space.rows]


@lru_cache(maxsize=None)
def _perms_with_inverse(m: int):
    out = []
    for p in itertools.permutations(range(m)):
        inv = [0] * m
        for i, x in enumerate(p):
            inv[x] = i
        out.append((tuple(inv), _perm_sign(p)))
    return tuple(out)


def _extension_entry_sum(B: np.ndarray, Js: Sequence[tuple[int, ...]], m: int) -> Fraction:
    """Raw sum over (sigma_1..sigma_k) in S_m^k with weight sg(sigma_1...sigma_k)/m!."""
    total = ZERO
    for choice in itertools.product(_perms_with_inverse(m), repeat=len(Js)):
        sg = 1
        for _, s in choice:
            sg *= s
        prod = Fraction(1)
        for r in range(m):
            prod *= B[tuple(J[inv[r]] for J, (inv, _) in zip(Js, choice))]
            if not prod:
                break
        total += sg * prod
    return total / math.factorial(m)


def _extension_entry_fixed(B: np.ndarray, Js: Sequence[tuple[int, ...]], m: int) -> Fraction:
    """Same sum with sigma_1 fixed to the identity; equal to the raw sum for even k."""
    total = ZERO
    J1, rest = Js[0], Js[1:]
    for choice in itertools.product(_perms_with_inverse(m), repeat=len(rest)):
        sg = 1
        for _, s in choice:
            sg *= s
        prod = Fraction(1)
        for r in range(m):
            prod *= B[(J1[r],) + tuple(J[inv[r]] for J, (inv, _) in zip(rest, choice))]
            if not prod:
                break
        total += sg * prod
    return total


def extend_form(b: MultiLinearForm, m: int, method: str = "auto", limits: Limits = DEFAULT_LIMITS) -> MultiLinearForm:
    """Extension of a k-linear form on g to Λ^m g.

    method "sum" evaluates the full permutation sum; "auto" uses determinants for
    k=2, the sigma_1 = id reduction for other even k and the full sum for odd k.
    """
    if b.grade != 1:
        raise ArityGradeMismatch(f"extension needs a form on g (grade 1), got grade {b.grade}")
    if b.symmetry == "antisymmetric":
        raise InputError("extension is applied to symmetric or untagged forms only")
    if method not in ("auto", "det", "sum"):
        raise InputError(f"unknown method {method!r}")
    n, k = b.dim, b.arity
    if not 0 <= m <= n:
        from .errors import GradeOutOfRange

        raise GradeOutOfRange(f"grade {m} outside 0..{n}")
    bs = blades(n, m)
    N = len(bs)
    if N**k > limits.max_tensor_entries:
        raise BoundExceeded(f"form tensor with {N ** k} entries exceeds bound {limits.max_tensor_entries}")
    B = b.tensor
    out = zeros(*([N] * k))
    if m == 0:
        out[(0,) * k] = Fraction(1)
        return MultiLinearForm(k, 0, out, b.symmetry)
    if method == "det" and k != 2:
        raise InputError("the determinant path is only defined for bilinear forms")
    use_det = k == 2 and method in ("auto", "det")
    use_fixed = method == "auto" and k % 2 == 0
    for idx in itertools.product(range(N), repeat=k):
        Js = [bs[i] for i in idx]
        if use_det:
            val = det(B[np.ix_(Js[0], Js[1])])
        elif use_fixed:
            val = _extension_entry_fixed(B, Js, m)
        else:
            val = _extension_entry_sum(B, Js, m)
        out[idx] = val
    return MultiLinearForm(k, m, out, b.symmetry)


def casimir_induced_form(L: LieAlgebra, C) -> tuple[MultiLinearForm, bool]:
    """b(v_1..v_k) = C(κ̃ v_1, .., κ̃ v_k); returns the form and its invariance flag."""
    C = np.array(C, dtype=object)
    C = np.vectorize(frac, otypes=[object])(C)
    k = C.ndim
    n = L.dim
    if C.shape != (n,) * k:
        raise InputError(f"C must have shape {(n,) * k}")
    if not has_symmetry(C, "symmetric"):
        raise InputError("C must be symmetric")
    kappa = killing_form(L).tensor
    t = C
    for s in range(k):
        # lower index s: t[.., i_s, ..] = sum_a kappa[i_s, a] C[.., a, ..]
        t = apply_on_slot(t, kappa.T, s)
    b = MultiLinearForm(k, 1, t, "symmetric")
    return b, is_invariant_tensor(t, L.ad_matrices)


def is_nondegenerate(b: MultiLinearForm) -> bool:
    if b.arity != 2:
        raise InputError("non-degeneracy is defined here for bilinear forms")
    return det(b.tensor) != 0
