"""Check catalog fixtures against live computations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ..algebra import LieAlgebra, derivation_algebra, is_automorphism, killing_form, structure_report
from ..errors import LiebError
from ..exterior import MultiVector, _split_blade, blades, lambda_power, schouten, sort_sign
from ..forms import extend_form, invariant_forms
from ..gradation import Gradation, induced_decomposition, limit_degrees, root_check
from ..invariants import (
    ideal_invariant_bridge,
    invariant_subspace,
    nilpotent_invariant_generators,
    reduced_action_table,
    reduced_invariant_forms,
    reduced_space,
)
from ..linalg import Subspace, frac_str
from ..ybe import certify_r, mcybe_residual, orbit_dimension, quadratic_separator, reduced_orbit_dimension
from . import entry, expected_results, get_algebra, gradation_specs, multivector, scalar


@dataclass(frozen=True)
class FixtureResult:
    entry: str
    params: tuple[Fraction, ...]
    index: int
    kind: str
    anchor: str
    passed: bool
    detail: str = ""

    def label(self) -> str:
        p = "" if not self.params else ":" + ",".join(frac_str(x) for x in self.params)
        if self.kind == "root":
            return f"{self.entry}{p} root[{-1 - self.index}]"
        return f"{self.entry}{p}#{self.index} {self.kind}"


class _Ctx:
    def __init__(self, L: LieAlgebra, grads: Sequence[Gradation], env: dict):
        self.L, self.grads, self.env = L, list(grads), env

    def mv(self, text: str, extra: dict | None = None) -> MultiVector:
        return multivector(self.L, text, {**self.env, **(extra or {})})

    def span(self, exprs: Sequence[str], m: int) -> Subspace:
        from ..algebra import binomial

        return Subspace.span([self.mv(e).coords(m) for e in exprs], binomial(self.L.dim, m))

    def matrix(self, rows, extra: dict | None = None) -> np.ndarray:
        env = {**self.env, **(extra or {})}
        return np.array([[scalar(x, env) for x in r] for r in rows], dtype=object)


def _grid(spec: dict, dim: int = 3):
    rng = range(int(spec["low"]), int(spec["high"]) + 1)
    return itertools.product(rng, repeat=dim)


def _points_env(pt) -> dict:
    return dict(zip("xyz", (Fraction(v) for v in pt)))


def _check_killing(c: _Ctx, f: dict) -> str:
    kb = killing_form(c.L)
    form = kb if f["grade"] == 1 else extend_form(kb, f["grade"])
    want = c.matrix(f["matrix"])
    return "" if (form.tensor == want).all() else f"got {form.tensor.tolist()}"


def _check_invariants(c: _Ctx, f: dict) -> str:
    got = invariant_subspace(c.L, f["grade"])
    want = c.span(f["basis"], f["grade"])
    return "" if got == want else f"got dimension {got.dim}, rows {[list(map(frac_str, r)) for r in got.rows]}"


def _check_residual(c: _Ctx, f: dict) -> str:
    top = MultiVector.basis(c.L, 0, 1, 2)
    for pt in _grid(f["grid"]):
        r = MultiVector.from_coords(c.L, 2, pt)
        want = top * scalar(f["expr"], {**c.env, **_points_env(pt)})
        if mcybe_residual(c.L, r) != want:
            return f"mismatch at {pt}"
    return ""


def _check_residual_invariant(c: _Ctx, f: dict) -> str:
    for pt in _grid(f["grid"]):
        if not certify_r(c.L, MultiVector.from_coords(c.L, 2, pt)).is_mcybe:
            return f"residual not invariant at {pt}"
    return ""


def _check_orbit_dim(c: _Ctx, f: dict) -> str:
    for text, dim in f["elements"]:
        w = c.mv(text)
        if f.get("reduced"):
            got = reduced_orbit_dimension(reduced_space(c.L, 2), reduced_space(c.L, 2).project(w))
        else:
            got = orbit_dimension(c.L, w)
        if got != dim:
            return f"{text}: orbit dimension {got}, expected {dim}"
    return ""


def _check_separator(c: _Ctx, f: dict) -> str:
    b = extend_form(killing_form(c.L), f["grade"])
    for pt in _grid(f["grid"]):
        r = MultiVector.from_coords(c.L, 2, pt)
        if quadratic_separator(c.L, b, r) != scalar(f["expr"], _points_env(pt)):
            return f"mismatch at {pt}"
    return ""


def _check_derivations(c: _Ctx, f: dict) -> str:
    der, inner = derivation_algebra(c.L)
    if (der.dim, inner.dim) != (f["der"], f["inner"]) or not inner <= der:
        return f"der {der.dim}, inner {inner.dim}"
    return ""


def _form_span(c: _Ctx, f: dict, N: int) -> Subspace:
    return Subspace.span([list(c.matrix(b).flat) for b in f["basis"]], N ** f["arity"])


def _check_invariant_forms(c: _Ctx, f: dict) -> str:
    from ..algebra import binomial

    N = binomial(c.L.dim, f["grade"])
    got = invariant_forms(c.L, f["grade"], f["arity"], f["symmetry"])
    if "dim" in f and got.dim != f["dim"]:
        return f"dimension {got.dim}, expected {f['dim']}"
    if "basis" in f and got != _form_span(c, f, N):
        return "solution space differs from the expected span"
    if "support" in f:
        allowed = {sum((i - 1) * N ** (f["arity"] - 1 - s) for s, i in enumerate(idx)) for idx in f["support"]}
        full = Subspace.span([[1 if j == a else 0 for j in range(N ** f["arity"])] for a in allowed], N ** f["arity"])
        if got != full:
            return "solution space does not match the expected sparsity pattern"
    return ""


def _check_extension(c: _Ctx, f: dict) -> str:
    from ..forms import MultiLinearForm

    b = MultiLinearForm(2, 1, c.matrix(f["form"], f["env"]))
    for m, mat in f["expected"].items():
        got = extend_form(b, int(m))
        if not (got.tensor == c.matrix(mat, f["env"])).all():
            return f"grade {m}: got {got.tensor.tolist()}"
    return ""


def _degree(c: _Ctx, key: str) -> tuple[Fraction, ...]:
    return tuple(scalar(x, c.env) for x in key.split(","))


def _blade_key(c: _Ctx, text: str):
    s, key = sort_sign(_split_blade(text, c.L.basis))
    return key


def _check_decomposition(c: _Ctx, f: dict) -> str:
    G = c.grads[f["gradation"]]
    D = induced_decomposition(c.L, G, f["grade"])
    want = {_degree(c, k): sorted(_blade_key(c, b) for b in v) for k, v in f["bases"].items()}
    got = {d: sorted(v) for d, v in D.blades.items()}
    if got != want:
        diff = sorted(set(got) ^ set(want)) or [d for d in want if got.get(d) != want[d]]
        return f"fibers differ at degrees {diff[:4]}"
    return ""


def _check_limit_degrees(c: _Ctx, f: dict) -> str:
    got = sorted(limit_degrees(c.L, c.grads[f["gradation"]]))
    want = sorted(_degree(c, k) for k in f["degrees"])
    return "" if got == want else f"got {len(got)} limit degrees"


def _check_limit_cybe(c: _Ctx, f: dict) -> str:
    G = c.grads[f["gradation"]]
    D = induced_decomposition(c.L, G, 2)
    for d in limit_degrees(c.L, G):
        keys = D.blades[d]
        combos = [MultiVector(c.L, {k: 1}) for k in keys]
        combos.append(MultiVector(c.L, {k: i + 1 for i, k in enumerate(keys)}))
        for r in combos:
            if not schouten(r, r).is_zero():
                return f"nonzero Schouten square in degree {d}"
    return ""


def _check_cybe(c: _Ctx, f: dict) -> str:
    for text in f["elements"]:
        v = certify_r(c.L, c.mv(text))
        if not (v.is_mcybe if f.get("modified") else v.is_cybe):
            return f"{text} is not a{'n mCYBE' if f.get('modified') else ' CYBE'} solution"
    return ""


def _check_automorphism(c: _Ctx, f: dict) -> str:
    extra = f.get("env", {})
    images = [c.mv(t, extra).coords(1) for t in f["images"]]
    T = np.array(images, dtype=object).T
    ok = is_automorphism(c.L, T)
    if ok != f["is_automorphism"]:
        return f"is_automorphism = {ok}"
    if not ok:
        return ""
    L2 = lambda_power(T, 2, "multiplicative")
    for src, dst in f.get("lambda2", {}).items():
        if L2.apply(c.mv(src).coords(2)) != c.mv(dst, extra).coords(2):
            return f"Λ²T({src}) differs"
    R = reduced_space(c.L, 2)
    for src, dst in f.get("reduced2", {}).items():
        img = MultiVector.from_coords(c.L, 2, L2.apply(c.mv(src).coords(2)))
        if R.project(img) != R.project(c.mv(dst, extra)):
            return f"reduced image of [{src}] differs"
    return ""


def _check_structure(c: _Ctx, f: dict) -> str:
    rep = structure_report(c.L)
    n = c.L.dim
    if "nilpotent" in f and rep.nilpotent != f["nilpotent"]:
        return "nilpotency differs"
    if "solvable" in f and rep.solvable != f["solvable"]:
        return "solvability differs"
    if "lower_central_dims" in f and [s.dim for s in rep.lower_central] != f["lower_central_dims"]:
        return f"lower central dims {[s.dim for s in rep.lower_central]}"
    if "center" in f and rep.center != c.span(f["center"], 1):
        return "center differs"
    if "derived" in f:
        d1 = rep.derived[1] if len(rep.derived) > 1 else rep.derived[0]
        if d1 != c.span(f["derived"], 1):
            return "derived ideal differs"
    del n
    return ""


def _check_nilpotent_generators(c: _Ctx, f: dict) -> str:
    gens = [g for g in nilpotent_invariant_generators(c.L) if g.grade == f["grade"]]
    want = c.span(f["basis"], f["grade"])
    return "" if gens and gens[0].space == want else "generator span differs"


def _check_bridge(c: _Ctx, f: dict) -> str:
    ideal = c.span(f["ideal"], 1)
    omega, cert = ideal_invariant_bridge(c.L, ideal)
    want = c.mv(f["omega"])
    if not Subspace.span([omega.coords(len(f["ideal"]))], len(want.coords(len(f["ideal"])))).contains(
        want.coords(len(f["ideal"]))
    ):
        return "top wedge differs"
    back, _ = ideal_invariant_bridge(c.L, want)
    return "" if back == ideal and cert.is_invariant else "factor ideal differs"


def _check_reduced_dim(c: _Ctx, f: dict) -> str:
    R = reduced_space(c.L, f["grade"])
    if R.dim != f["dim"] or R.labels() != f["labels"]:
        return f"reduced space {R.labels()}"
    return ""


def _reduced_span(c: _Ctx, R, exprs: Sequence[str]) -> Subspace:
    return Subspace.span([R.project(c.mv(e)).coords for e in exprs], R.dim)


def _check_action_table(c: _Ctx, f: dict) -> str:
    R = reduced_space(c.L, f["grade"])
    rows = {row["vector"]: row for row in reduced_action_table(R)}
    for v, spec in f["table"].items():
        row = rows[v]
        if row["image"] != _reduced_span(c, R, spec["image"]):
            return f"image of {v} differs"
        if row["representative_kernel"] != _reduced_span(c, R, spec["kernel"]):
            return f"representative kernel of {v} differs"
    for v, ker in f.get("reduced_kernel", {}).items():
        if rows[v]["kernel"] != _reduced_span(c, R, ker):
            return f"reduced kernel of {v} differs"
    return ""


def _check_reduced_forms(c: _Ctx, f: dict) -> str:
    R = reduced_space(c.L, f["grade"])
    got = reduced_invariant_forms(R, f["arity"], f["symmetry"])
    fams = [list(c.matrix(m).flat) for m in f["family"]]
    if got != Subspace.span(fams, R.dim ** f["arity"]):
        return f"reduced forms of dimension {got.dim}"
    if "separator" in f:
        B = c.matrix(f["family"][0])
        for pt in _grid(f["grid"], R.dim):
            v = np.array([Fraction(x) for x in pt], dtype=object)
            if v.dot(B).dot(v) != scalar(f["separator"], _points_env(pt)):
                return f"separator mismatch at {pt}"
    return ""


def _check_fields(c: _Ctx, f: dict) -> str:
    """Span of r -> [e_i, r]_S equals the span of the listed linear vector fields."""
    n2 = len(blades(c.L.dim, 2))
    mats = []
    for i in range(c.L.dim):
        e = MultiVector.basis(c.L, i)
        cols = [schouten(e, MultiVector.from_coords(c.L, 2, [1 if j == a else 0 for j in range(n2)])).coords(2) for a in range(n2)]
        mats.append([cols[a][b] for b in range(n2) for a in range(n2)])
    want = []
    for field in f["fields"]:
        M = []
        for comp in field:
            M.append([scalar(comp, {**c.env, **_points_env(p)}) for p in np.eye(3, dtype=int).tolist()])
        want.append([x for row in M for x in row])
    got_s, want_s = Subspace.span(mats, n2 * n2), Subspace.span(want, n2 * n2)
    return "" if got_s == want_s else f"field spans differ (dims {got_s.dim} vs {want_s.dim})"


def _check_bracket_values(c: _Ctx, f: dict) -> str:
    for a, b, res in f["pairs"]:
        got = c.L.bracket(c.mv(a).coords(1), c.mv(b).coords(1))
        if got != c.mv(res).coords(1):
            return f"[{a},{b}] differs"
    return ""


CHECKS: dict[str, Callable[[_Ctx, dict], str]] = {
    "killing": _check_killing,
    "invariants": _check_invariants,
    "residual": _check_residual,
    "residual_invariant": _check_residual_invariant,
    "orbit_dim": _check_orbit_dim,
    "separator": _check_separator,
    "derivations": _check_derivations,
    "invariant_forms": _check_invariant_forms,
    "extension": _check_extension,
    "decomposition": _check_decomposition,
    "limit_degrees": _check_limit_degrees,
    "limit_cybe": _check_limit_cybe,
    "cybe": _check_cybe,
    "automorphism": _check_automorphism,
    "structure": _check_structure,
    "nilpotent_generators": _check_nilpotent_generators,
    "bridge": _check_bridge,
    "reduced_dim": _check_reduced_dim,
    "action_table": _check_action_table,
    "reduced_forms": _check_reduced_forms,
    "fields": _check_fields,
    "bracket_values": _check_bracket_values,
}


def check_root_flags(name: str, params) -> list[tuple[int, bool, bool]]:
    """(gradation index, expected root flag, computed root flag)."""
    L, grads = get_algebra(name, params)
    specs = gradation_specs(name, params)
    return [(i, s["root"], root_check(L, G).is_root) for i, (s, G) in enumerate(zip(specs, grads))]


def run_fixtures(name: str, params=None) -> list[FixtureResult]:
    """Run every fixture of an entry; without params, every sample parameter set is used."""
    e = entry(name)
    sets = [tuple(params)] if params is not None else e.param_sets()
    out: list[FixtureResult] = []
    for ps in sets:
        fs = expected_results(name, ps)
        L, grads = get_algebra(name, ps)
        c = _Ctx(L, grads, e.env(ps))
        for i, exp, got in check_root_flags(name, ps):
            out.append(FixtureResult(name, fs.params, -1 - i, "root", f"root flag of gradation {i}", exp == got,
                                     "" if exp == got else f"computed {got}"))
        for i, f in enumerate(fs.fixtures):
            try:
                detail = CHECKS[f["kind"]](c, f)
            except LiebError as exc:
                detail = f"{type(exc).__name__}: {exc}"
            out.append(FixtureResult(name, fs.params, i, f["kind"], f.get("anchor", ""), not detail, detail))
    return out
