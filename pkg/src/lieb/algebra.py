"""Lie algebras given by structure constants, with adjoint maps, trace forms,
structural series, ideal predicates and derivations."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    BoundExceeded,
    DimensionMismatch,
    DuplicateBracketEntry,
    GradeMismatch,
    InputError,
    JacobiViolation,
    NotASubspaceOfG,
)
from .linalg import ZERO, Echelon, Subspace, frac, frac_str, matrix_rank, zeros


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    Structure constants are stored for i < j only (0-based):
    [e_i, e_j] = sum_k c[(i, j)][k] e_k.
    """

    def __init__(self, name: str, basis: Sequence[str], brackets: Mapping, check: bool = True):
        self.name = str(name)
        self.basis = tuple(str(b) for b in basis)
        if len(set(self.basis)) != len(self.basis):
            raise InputError(f"duplicate basis names in {self.basis}")
        n = len(self.basis)
        c: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), res in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatch(f"bracket index ({i + 1},{j + 1}) outside 1..{n}")
            if i == j:
                raise InputError(f"bracket [e{i + 1},e{i + 1}] must not be declared")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if (i, j) in c:
                raise DuplicateBracketEntry(f"bracket ({i + 1},{j + 1}) declared twice")
            out = {}
            for k, v in res.items():
                if not 0 <= k < n:
                    raise DimensionMismatch(f"result index {k + 1} outside 1..{n}")
                v = frac(v) * sign
                if v:
                    out[k] = v
            c[(i, j)] = out
        self._c = {key: val for key, val in c.items() if val}
        self._key = (self.basis, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self._c.items())))
        self._hash = hash(self._key)
        if check:
            check_jacobi(self)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name!r}, dim={self.dim})"

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    @property
    def structure_constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {k: dict(v) for k, v in self._c.items()}

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        if i < j:
            return self._c.get((i, j), {})
        if i > j:
            return {k: -v for k, v in self._c.get((j, i), {}).items()}
        return {}

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Bracket of coordinate vectors."""
        out = [ZERO] * self.dim
        for (i, j), res in self._c.items():
            a = u[i] * v[j] - u[j] * v[i]
            if a:
                for k, x in res.items():
                    out[k] += a * x
        return out

    @cached_property
    def ad_matrices(self) -> tuple[np.ndarray, ...]:
        n = self.dim
        mats = []
        for i in range(n):
            m = zeros(n, n)
            for j in range(n):
                for k, x in self.bracket_basis(i, j).items():
                    m[k, j] = x
            mats.append(m)
        return tuple(mats)

    def ad(self, v: Sequence) -> np.ndarray:
        m = zeros(self.dim, self.dim)
        for i, c in enumerate(v):
            if c:
                m = m + frac(c) * self.ad_matrices[i]
        return m

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": [
                {"i": i + 1, "j": j + 1, "result": {str(k + 1): frac_str(x) for k, x in sorted(res.items())}}
                for (i, j), res in sorted(self._c.items())
            ],
        }


def _vec_bracket_basis(L: LieAlgebra, u: Mapping[int, Fraction], k: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in u.items():
        for m, x in L.bracket_basis(i, k).items():
            out[m] = out.get(m, ZERO) + a * x
    return {m: x for m, x in out.items() if x}


def check_jacobi(L: LieAlgebra) -> None:
    """Raise JacobiViolation at the first basis triple i<j<k that fails."""
    n = L.dim
    for i, j, k in itertools.combinations(range(n), 3):
        total: dict[int, Fraction] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, x in _vec_bracket_basis(L, L.bracket_basis(a, b), c).items():
                total[m] = total.get(m, ZERO) + x
        defect = {m: x for m, x in total.items() if x}
        if defect:
            raise JacobiViolation((i + 1, j + 1, k + 1), {m + 1: x for m, x in defect.items()})


def load_algebra(doc: Mapping) -> LieAlgebra:
    """Build a validated LieAlgebra from an algebra document (1-based indices)."""
    try:
        basis = list(doc["basis"])
        dim = int(doc.get("dim", len(basis)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed algebra document: {exc}") from exc
    if dim != len(basis):
        raise DimensionMismatch(f"dim {dim} but {len(basis)} basis names")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen = set()
    for entry in doc.get("brackets", []):
        try:
            i, j = int(entry["i"]) - 1, int(entry["j"]) - 1
            res = {int(k) - 1: frac(v) for k, v in entry["result"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed bracket entry {entry!r}") from exc
        pair = (min(i, j), max(i, j))
        if pair in seen:
            raise DuplicateBracketEntry(f"bracket ({pair[0] + 1},{pair[1] + 1}) declared twice")
        seen.add(pair)
        brackets[(i, j)] = res
    return LieAlgebra(doc.get("name", "unnamed"), basis, brackets)


@dataclass(frozen=True)
class EndoMap:
    """Linear map of Λ^m g, as a matrix in the canonical basis (columns are images)."""

    grade: int
    matrix: np.ndarray

    def __post_init__(self):
        n = self.matrix.shape[0]
        if self.matrix.shape != (n, n):
            raise InputError("EndoMap matrix must be square")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EndoMap)
            and self.grade == other.grade
            and self.matrix.shape == other.matrix.shape
            and bool((self.matrix == other.matrix).all())
        )

    def __matmul__(self, other: EndoMap) -> EndoMap:
        return EndoMap(self.grade, self.matrix.dot(other.matrix))

    def apply(self, v: Sequence) -> list[Fraction]:
        return list(self.matrix.dot(np.array(list(v), dtype=object)))


def _grade1_coords(L: LieAlgebra, v) -> list[Fraction]:
    from .exterior import MultiVector

    if isinstance(v, MultiVector):
        if v.algebra != L:
            from .errors import AlgebraMismatch

            raise AlgebraMismatch("vector belongs to a different algebra")
        if v.terms and v.grades() != {1}:
            raise GradeMismatch(f"expected a grade-1 element, got grades {sorted(v.grades())}")
        return v.coords(1)
    v = [frac(x) for x in v]
    if len(v) != L.dim:
        raise GradeMismatch(f"expected {L.dim} coordinates")
    return v


def adjoint(L: LieAlgebra, v) -> EndoMap:
    return EndoMap(1, L.ad(_grade1_coords(L, v)))


def killing_form(L: LieAlgebra):
    from .forms import MultiLinearForm

    n = L.dim
    ads = L.ad_matrices
    t = zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            x = sum((a * b for a, b in zip(ads[i].flat, ads[j].T.flat)), ZERO)
            t[i, j] = t[j, i] = x
    return MultiLinearForm(2, 1, t, "symmetric")


def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def trace_form(L: LieAlgebra, k: int, symmetry: str = "symmetric", limits: Limits = DEFAULT_LIMITS):
    """(Anti)symmetrized b(v_1..v_k) = sum_sigma [sg] Tr(ad_{v_sigma(1)} ... ad_{v_sigma(k)})."""
    from .forms import MultiLinearForm

    if k < 2:
        raise InputError("trace forms need arity k >= 2")
    if k > limits.max_trace_arity:
        raise BoundExceeded(f"arity {k} exceeds configured bound {limits.max_trace_arity}")
    if symmetry not in ("symmetric", "antisymmetric"):
        raise InputError(f"unknown symmetry {symmetry!r}")
    n = L.dim
    if n**k > limits.max_tensor_entries:
        raise BoundExceeded(f"tensor with {n ** k} entries exceeds bound {limits.max_tensor_entries}")
    ads = L.ad_matrices
    raw = zeros(*([n] * k))
    # products over all but the last slot are shared between multi-indices
    prefix: dict[tuple[int, ...], np.ndarray] = {}
    for idx in itertools.product(range(n), repeat=k):
        head = idx[:-1]
        m = prefix.get(head)
        if m is None:
            m = ads[head[0]]
            for a in head[1:]:
                m = m.dot(ads[a])
            prefix[head] = m
        # Tr(m @ last) without forming the product
        raw[idx] = sum((x * y for x, y in zip(m.flat, ads[idx[-1]].T.flat)), ZERO)
    out = zeros(*([n] * k))
    for perm in itertools.permutations(range(k)):
        sg = _perm_sign(perm) if symmetry == "antisymmetric" else 1
        out = out + sg * raw.transpose(perm)
    return MultiLinearForm(k, 1, out, symmetry)


def _vectors_bracket_span(L: LieAlgebra, A: Sequence[Sequence], B: Sequence[Sequence]) -> Subspace:
    return Subspace.span((L.bracket(a, b) for a in A for b in B), L.dim, "g")


def _unit(n: int, i: int) -> list[Fraction]:
    v = [ZERO] * n
    v[i] = Fraction(1)
    return v


@dataclass(frozen=True)
class StructureReport:
    center: Subspace
    lower_central: tuple[Subspace, ...]  # g_{0)} = g, g_{1)}, ... until it repeats
    derived: tuple[Subspace, ...]  # g^{0)} = g, g^{1)}, ...
    nilpotent: bool
    solvable: bool
    unimodular: bool
    ad_traces: tuple[Fraction, ...]


def center(L: LieAlgebra) -> Subspace:
    n = L.dim
    # v in the center iff ad_{e_j} v = 0 for all j
    rows = [list(L.ad_matrices[j][k, :]) for j in range(n) for k in range(n)]
    return Subspace.kernel(rows, n, "g")


def structure_report(L: LieAlgebra) -> StructureReport:
    n = L.dim
    full = Subspace.full(n, "g")
    basis = [_unit(n, i) for i in range(n)]
    lower = [full]
    while True:
        nxt = _vectors_bracket_span(L, basis, lower[-1].rows)
        if nxt == lower[-1]:
            break
        lower.append(nxt)
        if nxt.dim == 0:
            break
    derived = [full]
    while True:
        cur = derived[-1].rows
        nxt = _vectors_bracket_span(L, cur, cur)
        if nxt == derived[-1]:
            break
        derived.append(nxt)
        if nxt.dim == 0:
            break
    traces = tuple(sum((m[i, i] for i in range(n)), ZERO) for m in L.ad_matrices)
    return StructureReport(
        center=center(L),
        lower_central=tuple(lower),
        derived=tuple(derived),
        nilpotent=lower[-1].dim == 0,
        solvable=derived[-1].dim == 0,
        unimodular=all(t == 0 for t in traces),
        ad_traces=traces,
    )


@dataclass(frozen=True)
class IdealReport:
    is_subalgebra: bool
    is_ideal: bool
    is_traceless_ideal: bool
    traces: tuple[Fraction | None, ...]  # Tr(ad_{e_i}|_h); None where h is not ad_{e_i}-stable


def restricted_trace(h: Subspace, m: np.ndarray) -> Fraction | None:
    """Tr(m|_h) when m(h) ⊆ h, else None.

    In the echelon basis of h the coordinate of a vector is its value at the pivot,
    so the diagonal of the restricted block is read directly.
    """
    total = ZERO
    for p, row in zip(h.pivots, h.rows):
        img = list(m.dot(np.array(row, dtype=object)))
        if not h.contains(img):
            return None
        total += img[p]
    return total


def ideal_report(L: LieAlgebra, h: Subspace) -> IdealReport:
    if h.ambient != L.dim:
        raise NotASubspaceOfG(f"subspace of ambient dimension {h.ambient} is not inside g (dim {L.dim})")
    sub = all(h.contains(L.bracket(a, b)) for a in h.rows for b in h.rows)
    traces = tuple(restricted_trace(h, m) for m in L.ad_matrices)
    ideal = all(t is not None for t in traces)
    return IdealReport(
        is_subalgebra=sub,
        is_ideal=ideal,
        is_traceless_ideal=ideal and all(t == 0 for t in traces),
        traces=traces,
    )


def derivation_equations(L: LieAlgebra) -> list[dict[int, Fraction]]:
    """Rows of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0 in the unknowns D[a,b] (index a*n+b)."""
    n = L.dim
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        # one equation per output coordinate k
        eq = [dict() for _ in range(n)]

        def add(k, var, x):
            eq[k][var] = eq[k].get(var, ZERO) + x

        # D[e_i,e_j]: sum_m c_ij^m D[k,m]
        for m, x in L.bracket_basis(i, j).items():
            for k in range(n):
                add(k, k * n + m, x)
        # -[D e_i, e_j] = -sum_a D[a,i] [e_a,e_j]
        for a in range(n):
            for k, x in L.bracket_basis(a, j).items():
                add(k, a * n + i, -x)
            for k, x in L.bracket_basis(i, a).items():
                add(k, a * n + j, -x)
        for r in eq:
            r = {v: x for v, x in r.items() if x}
            if r:
                rows.append(r)
    return rows


def is_derivation(L: LieAlgebra, D: np.ndarray) -> bool:
    n = L.dim
    for i, j in itertools.combinations(range(n), 2):
        ei, ej = _unit(n, i), _unit(n, j)
        lhs = list(D.dot(np.array(L.bracket(ei, ej), dtype=object)))
        r1 = L.bracket(list(D[:, i]), ej)
        r2 = L.bracket(ei, list(D[:, j]))
        if any(a != b + c for a, b, c in zip(lhs, r1, r2)):
            return False
    return True


def derivation_algebra(L: LieAlgebra) -> tuple[Subspace, Subspace]:
    """(der g, inner derivations) as subspaces of gl(g), matrices flattened row-major."""
    n = L.dim
    e = Echelon(n * n)
    for r in derivation_equations(L):
        e.add(r)
    der = Subspace.span(e.nullspace(), n * n, "gl(g)")
    inner = Subspace.span((list(m.flat) for m in L.ad_matrices), n * n, "gl(g)")
    return der, inner


def matrix_from_flat(v: Sequence, n: int) -> np.ndarray:
    m = zeros(n, n)
    for idx, x in enumerate(v):
        m[idx // n, idx % n] = frac(x)
    return m


def is_automorphism(L: LieAlgebra, T: np.ndarray) -> bool:
    """T invertible and T[x,y] = [Tx,Ty] on all basis pairs (columns of T are images)."""
    n = L.dim
    if T.shape != (n, n) or matrix_rank(T) != n:
        return False
    for i, j in itertools.combinations(range(n), 2):
        lhs = list(T.dot(np.array(L.bracket(_unit(n, i), _unit(n, j)), dtype=object)))
        rhs = L.bracket(list(T[:, i]), list(T[:, j]))
        if any(a != b for a, b in zip(lhs, rhs)):
            return False
    return True


def binomial(n: int, m: int) -> int:
    return math.comb(n, m) if 0 <= m <= n else 0
