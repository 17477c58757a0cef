"""Group gradations of g, the induced decompositions of Λ^m g, root-gradation
detection and limit homogeneous spaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import LieAlgebra
from .errors import ClosureViolation, GradeOutOfRange, InputError, ModulusViolation
from .exterior import MultiVector, _schouten_blades, blades
from .linalg import ZERO, Subspace, frac, frac_str, solve_in_span

Degree = tuple[Fraction, ...]


@dataclass(frozen=True)
class GroupDescriptor:
    """Z^a x Z_q1 x ... written coordinatewise; modulus 0 marks a free (rational) coordinate."""

    moduli: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def free_rank(self) -> int:
        return sum(1 for q in self.moduli if q == 0)

    def zero(self) -> Degree:
        return tuple(ZERO for _ in self.moduli)

    def op(self, a: Degree, b: Degree) -> Degree:
        return tuple((x + y) % q if q else x + y for x, y, q in zip(a, b, self.moduli))

    def sum(self, degs) -> Degree:
        out = self.zero()
        for d in degs:
            out = self.op(out, d)
        return out

    def neg(self, a: Degree) -> Degree:
        return tuple((-x) % q if q else -x for x, q in zip(a, self.moduli))

    def check(self, d: Degree) -> Degree:
        if len(d) != self.rank:
            raise InputError(f"degree {d} has {len(d)} coordinates, group rank is {self.rank}")
        for x, q in zip(d, self.moduli):
            if q and (x.denominator != 1 or not 0 <= x < q):
                raise ModulusViolation(f"coordinate {x} of {d} is not an integer in [0,{q})")
        return d

    def to_json(self) -> dict:
        return {"rank": self.rank, "moduli": list(self.moduli)}


def degree_key(d: Degree) -> str:
    return ",".join(frac_str(x) for x in d)


@dataclass(frozen=True)
class Gradation:
    group: GroupDescriptor
    degrees: tuple[Degree, ...]
    label: str = field(default="", compare=False)

    def degree_of(self, key: Sequence[int]) -> Degree:
        return self.group.sum(self.degrees[i] for i in key)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "degrees": [[frac_str(x) for x in d] for d in self.degrees],
        }


def check_closure(L: LieAlgebra, G: Gradation) -> None:
    for (i, j), res in sorted(L.structure_constants.items()):
        expected = G.group.op(G.degrees[i], G.degrees[j])
        for k in sorted(res):
            if G.degrees[k] != expected:
                raise ClosureViolation(
                    (L.basis[i], L.basis[j]), L.basis[k], degree_key(expected), degree_key(G.degrees[k])
                )


def make_gradation(L: LieAlgebra, moduli: Sequence[int], degrees: Sequence, label: str = "") -> Gradation:
    moduli = tuple(int(q) for q in moduli)
    if any(q < 0 for q in moduli):
        raise ModulusViolation("moduli must be nonnegative")
    group = GroupDescriptor(moduli)
    if len(degrees) != L.dim:
        raise InputError(f"{len(degrees)} degrees for an algebra of dimension {L.dim}")
    degs = []
    for d in degrees:
        if not isinstance(d, (list, tuple)):
            d = [d]
        degs.append(group.check(tuple(frac(x) for x in d)))
    G = Gradation(group, tuple(degs), label)
    check_closure(L, G)
    return G


def load_gradation(L: LieAlgebra, doc: Mapping) -> Gradation:
    try:
        grp = doc["group"]
        moduli = grp.get("moduli") or [0] * int(grp["rank"])
        if "rank" in grp and int(grp["rank"]) != len(moduli):
            raise InputError("group rank does not match the number of moduli")
        degrees = doc["degrees"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed gradation document: {exc}") from exc
    return make_gradation(L, moduli, degrees, doc.get("label", ""))


@dataclass(frozen=True)
class Decomposition:
    grade: int
    blades: dict[Degree, tuple[tuple[int, ...], ...]]  # degree -> canonical basis m-vectors
    fibers: dict[Degree, Subspace]

    def dims(self) -> dict[Degree, int]:
        return {d: s.dim for d, s in self.fibers.items()}

    def total(self) -> int:
        return sum(s.dim for s in self.fibers.values())


def induced_decomposition(L: LieAlgebra, G: Gradation, m: int) -> Decomposition:
    if not 0 <= m <= L.dim:
        raise GradeOutOfRange(f"grade {m} outside 0..{L.dim}")
    bs = blades(L.dim, m)
    N = len(bs)
    groups: dict[Degree, list] = {}
    for pos, key in enumerate(bs):
        groups.setdefault(G.degree_of(key), []).append((pos, key))
    fib, bl = {}, {}
    for d in sorted(groups):
        items = groups[d]
        vecs = []
        for pos, _ in items:
            v = [ZERO] * N
            v[pos] = Fraction(1)
            vecs.append(v)
        fib[d] = Subspace.span(vecs, N, f"Λ^{m}")
        bl[d] = tuple(k for _, k in items)
    return Decomposition(m, bl, fib)


def homogeneous_component(w: MultiVector, G: Gradation, d: Degree) -> MultiVector:
    return MultiVector(w.algebra, {k: c for k, c in w.terms.items() if G.degree_of(k) == d})


@dataclass(frozen=True)
class RootCheck:
    is_root: bool
    reason: str
    degree_zero: tuple[int, ...]
    functionals: dict[Degree, tuple[Fraction, ...]]


def root_check(L: LieAlgebra, G: Gradation) -> RootCheck:
    zero = G.group.zero()
    g0 = tuple(i for i, d in enumerate(G.degrees) if d == zero)
    fail = lambda why: RootCheck(False, why, g0, {})  # noqa: E731
    if len(g0) != G.group.free_rank:
        return fail(f"dim g^(0) = {len(g0)} differs from free rank {G.group.free_rank}")
    for a, b in itertools.combinations(g0, 2):
        if L.bracket_basis(a, b):
            return fail("g^(0) is not abelian")
    functionals: dict[Degree, tuple[Fraction, ...]] = {}
    for j in range(L.dim):
        lam = []
        for i in g0:
            br = L.bracket_basis(i, j)
            if set(br) - {j}:
                return fail(f"{L.basis[j]} is not an eigenvector of ad {L.basis[i]}")
            lam.append(br.get(j, ZERO))
        lam = tuple(lam)
        d = G.degrees[j]
        if functionals.setdefault(d, lam) != lam:
            return fail(f"basis vectors of degree {degree_key(d)} carry different eigenvalues")
    functionals.setdefault(zero, tuple(ZERO for _ in g0))
    if functionals[zero] != tuple(ZERO for _ in g0):
        return fail("degree zero must map to the zero functional")
    # T must be the restriction of a group morphism: linear in the free coordinates,
    # blind to torsion coordinates
    free = [c for c, q in enumerate(G.group.moduli) if q == 0]
    for r in range(len(g0)):
        rows = [[d[c] for d in functionals] for c in free]
        target = [functionals[d][r] for d in functionals]
        if solve_in_span(rows, target) is None:
            return fail("degree-to-functional map is not a group morphism")
    seen: dict[tuple, Degree] = {}
    for d, f in functionals.items():
        if f in seen and seen[f] != d:
            return fail(f"degrees {degree_key(d)} and {degree_key(seen[f])} share a functional")
        seen[f] = d
    return RootCheck(True, "", g0, functionals)


def limit_degrees(L: LieAlgebra, G: Gradation) -> list[Degree]:
    """Λ² degrees α whose Λ³ fiber at α⋆α is zero."""
    d2 = induced_decomposition(L, G, 2).fibers if L.dim >= 2 else {}
    d3 = induced_decomposition(L, G, 3).fibers if L.dim >= 3 else {}
    return [a for a in d2 if G.group.op(a, a) not in d3]


def schouten_compatible(L: LieAlgebra, G: Gradation, max_grade: int = 3) -> bool:
    """[(Λ^p)^(α), (Λ^q)^(β)]_S ⊆ (Λ^{p+q-1})^(α⋆β) on all canonical basis pairs."""
    top = min(max_grade, L.dim)
    for p in range(1, top + 1):
        for q in range(p, top + 1):
            if p + q - 1 > L.dim:
                continue
            for I in blades(L.dim, p):
                dI = G.degree_of(I)
                for J in blades(L.dim, q):
                    want = G.group.op(dI, G.degree_of(J))
                    for K, _ in _schouten_blades(L, I, J):
                        if G.degree_of(K) != want:
                            return False
    return True


@dataclass(frozen=True)
class GradationReport:
    is_root: bool
    root_reason: str
    limit_degrees: tuple[Degree, ...]
    schouten_compatible: bool
    fiber_dims: dict[int, dict[Degree, int]]


def gradation_report(L: LieAlgebra, G: Gradation, max_grade: int = 3) -> GradationReport:
    rc = root_check(L, G)
    dims = {m: induced_decomposition(L, G, m).dims() for m in range(1, min(max_grade, L.dim) + 1)}
    return GradationReport(
        is_root=rc.is_root,
        root_reason=rc.reason,
        limit_degrees=tuple(limit_degrees(L, G)),
        schouten_compatible=schouten_compatible(L, G, max_grade),
        fiber_dims=dims,
    )
