"""Command-line interface: `lieb <command> [options]`.

Exit codes: 0 success, 1 mathematical failure, 2 input or usage error.
JSON output uses sorted keys and rationals written as "p/q".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import catalog
from .algebra import LieAlgebra, derivation_algebra, killing_form, load_algebra, structure_report
from .errors import InputError, LiebError, MathFailure
from .exterior import MultiVector, blade_label, format_multivector, multivector_from_json, parse_multivector
from .forms import MultiLinearForm, extend_form, forms_basis, invariant_forms
from .gradation import Gradation, degree_key, induced_decomposition, limit_degrees, load_gradation, root_check
from .invariants import ideal_invariant_bridge, invariant_subspace, reduced_action_table, reduced_space
from .linalg import Subspace, frac, frac_str
from .ybe import certify_r, cocommutator, is_cocommutator, mcybe_residual, orbit_dimension, reduced_orbit_dimension


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- rendering


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if isinstance(x, MultiVector):
        return x.to_json()["terms"]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def dump_json(doc: Any) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False)


def _use_color(stream) -> bool:
    mode = os.environ.get("LIEB_COLOR", "auto").lower()
    if mode not in ("auto", "never"):
        raise UsageError(f"LIEB_COLOR must be auto or never, got {mode!r}")
    return mode == "auto" and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _text(doc: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(doc, dict):
        out = []
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                out.append(f"{pad}{k}:")
                out.extend(_text(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_inline(v)}")
        return out
    if isinstance(doc, list):
        return [f"{pad}- {_inline(v)}" if not isinstance(v, (dict, list)) or _flat_list(v) else "\n".join(_text(v, indent + 1)) for v in doc]
    return [f"{pad}{_inline(doc)}"]


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v) and all(
        not isinstance(x, list) or all(not isinstance(y, (list, dict)) for y in x) for x in v
    )


def _inline(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(v[k])}" for k in sorted(v)) + "}"
    return str(v)


# ---------------------------------------------------------------- inputs


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _json_arg(text: str) -> Any:
    """Inline JSON, or @path to read it from a file."""
    if text.startswith("@"):
        return _read_json(text[1:])
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {text!r}") from exc


def load_reference(ref: str) -> tuple[LieAlgebra, list[Gradation]]:
    if ref.startswith("catalog:"):
        name, params = catalog.parse_reference(ref)
        if params is None:
            params = catalog.default_params(name)
        return catalog.get_algebra(name, params)
    doc = _read_json(ref)
    L = load_algebra(doc)
    grads = [load_gradation(L, g) for g in doc.get("gradations", [])]
    return L, grads


def parse_element(L: LieAlgebra, text: str) -> MultiVector:
    text = text.strip()
    if text.startswith("{") or text.startswith("@"):
        return multivector_from_json(L, _json_arg(text))
    return parse_multivector(L, text)


def _gradation(args, L: LieAlgebra, grads: list[Gradation]) -> Gradation:
    g = args.gradation
    if g is None or g.isdigit():
        i = int(g or 0)
        if not 0 <= i < len(grads):
            raise InputError(f"algebra has {len(grads)} gradation(s); index {i} is out of range")
        return grads[i]
    return load_gradation(L, _json_arg(g))


def _labels(L: LieAlgebra, space: Subspace, m: int) -> list[str]:
    return [format_multivector(MultiVector.from_coords(L, m, r)) for r in space.rows]


# ---------------------------------------------------------------- commands


def cmd_check(args, L, grads):
    return {"algebra": L.name, "dim": L.dim, "basis": list(L.basis), "jacobi": True, "gradations": len(grads)}, 0


def cmd_killing(args, L, grads):
    kb = killing_form(L)
    form = kb if args.grade == 1 else extend_form(kb, args.grade)
    return {"grade": args.grade, "matrix": form.tensor}, 0


def cmd_invariants(args, L, grads):
    sp = invariant_subspace(L, args.grade)
    return {"grade": args.grade, "dim": sp.dim, "basis": _labels(L, sp, args.grade)}, 0


def cmd_forms(args, L, grads):
    sym = "symmetric" if args.sym else "antisymmetric" if args.antisym else "none"
    sp = invariant_forms(L, args.grade, args.arity, sym)
    from .algebra import binomial

    N = binomial(L.dim, args.grade)
    basis = [f.tensor for f in forms_basis(sp, N, args.arity, args.grade, sym)]
    return {"grade": args.grade, "arity": args.arity, "symmetry": sym, "dim": sp.dim, "basis": basis}, 0


def cmd_extend_form(args, L, grads):
    if args.form is None:
        b = killing_form(L)
    else:
        t = np.array(_json_arg(args.form), dtype=object)
        b = MultiLinearForm(t.ndim, 1, np.vectorize(frac, otypes=[object])(t))
        if b.dim != L.dim:
            raise InputError(f"form acts on dimension {b.dim}, algebra has dimension {L.dim}")
    out = extend_form(b, args.grade, args.method)
    return {"grade": args.grade, "arity": out.arity, "tensor": out.tensor}, 0


def cmd_gradation(args, L, grads):
    G = _gradation(args, L, grads)
    if args.action == "verify":
        rc = root_check(L, G)
        return {"closure": True, "root": rc.is_root, "reason": rc.reason, "gradation": G.to_json()}, 0
    if args.action == "decompose":
        if args.grade is None:
            raise UsageError("gradation decompose needs --grade")
        D = induced_decomposition(L, G, args.grade)
        fibers = {
            degree_key(d): {"dim": len(bl), "basis": [blade_label(L, k) for k in bl]} for d, bl in D.blades.items()
        }
        return {"grade": args.grade, "fibers": fibers, "total": D.total()}, 0
    # report: fiber dimension tables for every grade and the limit degrees
    tables = {}
    for m in range(L.dim + 1):
        D = induced_decomposition(L, G, m)
        tables[str(m)] = {degree_key(d): n for d, n in D.dims().items()}
    rc = root_check(L, G)
    limits = [degree_key(d) for d in sorted(limit_degrees(L, G))]
    return {"root": rc.is_root, "dimensions": tables, "limit_degrees": limits}, 0


def cmd_ybe(args, L, grads):
    r = parse_element(L, args.r)
    if args.action == "residual":
        return {"residual": mcybe_residual(L, r)}, 0
    if args.action == "certify":
        v = certify_r(L, r)
        verdict = v.is_cybe if args.classical else v.is_mcybe
        doc = {"residual": v.residual, "is_cybe": v.is_cybe, "is_mcybe": v.is_mcybe, "witness": v.witness}
        code = 0
        if args.expect is not None and verdict != (args.expect == "pass"):
            code = 1
        return doc, code
    delta = cocommutator(L, r)
    images = {L.basis[i]: MultiVector.from_coords(L, 2, list(delta[:, i])) for i in range(L.dim)}
    return {"images": images, "matrix": delta, "is_cocommutator": is_cocommutator(L, delta)}, 0


def cmd_orbit_dim(args, L, grads):
    w = parse_element(L, args.w)
    if args.reduced:
        R = reduced_space(L, w.grade())
        return {"orbit_dim": reduced_orbit_dimension(R, R.project(w)), "reduced": True}, 0
    return {"orbit_dim": orbit_dimension(L, w), "reduced": False}, 0


def cmd_reduced(args, L, grads):
    R = reduced_space(L, args.grade)
    table = {}
    for row in reduced_action_table(R):
        table[row["vector"]] = {k: [list(v) for v in row[k].rows] for k in ("image", "kernel", "representative_kernel")}
    return {"grade": args.grade, "dim": R.dim, "labels": R.labels(), "action_table": table}, 0


def cmd_derivations(args, L, grads):
    der, inner = derivation_algebra(L)
    return {"der": der.dim, "inner": inner.dim, "outer": der.dim - inner.dim}, 0


def cmd_series(args, L, grads):
    rep = structure_report(L)
    return {
        "lower_central": [s.dim for s in rep.lower_central],
        "derived": [s.dim for s in rep.derived],
        "center": _labels(L, rep.center, 1),
        "nilpotent": rep.nilpotent,
        "solvable": rep.solvable,
        "unimodular": rep.unimodular,
    }, 0


def cmd_bridge(args, L, grads):
    if args.ideal is not None:
        vecs = [parse_element(L, t).coords(1) for t in args.ideal.split(",")]
        omega, cert = ideal_invariant_bridge(L, Subspace.span(vecs, L.dim, "g"))
        return {"omega": format_multivector(omega), "invariant": cert.is_invariant}, 0
    span, cert = ideal_invariant_bridge(L, parse_element(L, args.invariant))
    return {"ideal": _labels(L, span, 1), "traceless_ideal": cert.is_traceless}, 0


def cmd_catalog(args):
    if args.action == "list":
        return {"entries": [{"name": n, "title": catalog.entry(n).title, "params": [p["name"] for p in catalog.entry(n).params]}
                            for n in catalog.list_names()]}, 0
    if not args.name:
        raise UsageError(f"catalog {args.action} needs NAME")
    e = catalog.entry(args.name)
    params = _params(args, args.name)
    if args.action == "get":
        L, _ = catalog.get_algebra(args.name, params)
        doc = L.to_document()
        doc["gradations"] = [dict(g, degrees=[[frac_str(x) for x in d] for d in g["degrees"]])
                             for g in catalog.gradation_specs(args.name, params)]
        doc["title"] = e.title
        return doc, 0
    fs = catalog.expected_results(args.name, params)
    return {"name": fs.name, "params": list(fs.params), "fixtures": list(fs.fixtures)}, 0


def _params(args, name: str):
    if args.params is None:
        return catalog.default_params(name)
    return tuple(frac(p) for p in args.params.split(","))


def cmd_regress(args):
    from .catalog.regress import run_fixtures

    names = catalog.list_names() if args.name == "all" else [args.name]
    results = []
    for n in names:
        params = None if args.params is None else _params(args, n)
        results.extend(run_fixtures(n, params))
    failed = [r for r in results if not r.passed]
    doc = {
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": [{"fixture": r.label(), "anchor": r.anchor, "detail": r.detail} for r in failed],
    }
    return doc, (1 if failed else 0), results


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lieb", description="Exact Lie algebra and Yang-Baxter computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def alg(name, **kw):
        s = sub.add_parser(name, **kw)
        s.add_argument("--algebra", required=True, help="catalog:NAME[:p1,p2] or path to an algebra JSON document")
        s.add_argument("--format", choices=("json", "text"), default="json")
        return s

    alg("check", help="load an algebra and verify the Jacobi identity")
    s = alg("killing", help="Killing form and its extensions")
    s.add_argument("--grade", type=int, default=1)
    s = alg("invariants", help="invariant multivectors of a grade")
    s.add_argument("--grade", type=int, required=True)
    s = alg("forms", help="invariant multilinear forms")
    s.add_argument("--grade", type=int, required=True)
    s.add_argument("--arity", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--sym", action="store_true")
    g.add_argument("--antisym", action="store_true")
    s = alg("extend-form", help="extend a form on g to a higher exterior power")
    s.add_argument("--form", help="tensor as inline JSON or @path; the Killing form when omitted")
    s.add_argument("--grade", type=int, required=True)
    s.add_argument("--method", choices=("auto", "det", "sum"), default="auto")
    s = alg("gradation", help="verify, decompose and report on a gradation")
    s.add_argument("action", choices=("verify", "decompose", "report"))
    s.add_argument("--gradation", help="index of a built-in gradation (default 0), inline JSON or @path")
    s.add_argument("--grade", type=int)
    s = alg("ybe", help="Yang-Baxter residuals, certificates and cocommutators")
    s.add_argument("action", choices=("residual", "certify", "cocommutator"))
    s.add_argument("-r", required=True, help='bivector, e.g. "3/2*e12 - e13"')
    s.add_argument("--expect", choices=("pass", "fail"))
    s.add_argument("--classical", action="store_true", help="certify against the CYBE instead of the mCYBE")
    s = alg("orbit-dim", help="dimension of the inner orbit of a multivector")
    s.add_argument("-w", required=True)
    s.add_argument("--reduced", action="store_true")
    s = alg("reduced", help="reduced space and its action table")
    s.add_argument("--grade", type=int, required=True)
    alg("derivations", help="dimensions of the derivation algebra and inner derivations")
    alg("series", help="lower central and derived series, center")
    s = alg("bridge", help="traceless ideals and decomposable invariants")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ideal", help="comma-separated spanning vectors")
    g.add_argument("--invariant", help="decomposable invariant multivector")

    s = sub.add_parser("catalog", help="list, show or dump built-in algebras")
    s.add_argument("action", choices=("list", "get", "fixtures"))
    s.add_argument("name", nargs="?")
    s.add_argument("--params", help="comma-separated rational parameters")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s = sub.add_parser("regress", help="run the fixtures of a catalog entry (or all)")
    s.add_argument("name")
    s.add_argument("--params", help="comma-separated rational parameters; every sample set when omitted")
    s.add_argument("--format", choices=("json", "text"), default="json")
    return p


COMMANDS = {
    "check": cmd_check,
    "killing": cmd_killing,
    "invariants": cmd_invariants,
    "forms": cmd_forms,
    "extend-form": cmd_extend_form,
    "gradation": cmd_gradation,
    "ybe": cmd_ybe,
    "orbit-dim": cmd_orbit_dim,
    "reduced": cmd_reduced,
    "derivations": cmd_derivations,
    "series": cmd_series,
    "bridge": cmd_bridge,
}


def _emit(doc, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dump_json(doc) + "\n")
    else:
        out.write("\n".join(_text(jsonable(doc))) + "\n")


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        color = _use_color(out)
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing command; see lieb --help")
        if args.command == "regress":
            doc, code, results = cmd_regress(args)
            if args.format == "text":
                for r in results:
                    tag = _paint("PASS" if r.passed else "FAIL", r.passed, color)
                    out.write(f"{tag} {r.label()}: {r.anchor}" + (f" ({r.detail})" if r.detail else "") + "\n")
                out.write(f"{doc['passed']}/{doc['total']} fixtures pass\n")
            else:
                _emit(doc, "json", out)
            return code
        if args.command == "catalog":
            doc, code = cmd_catalog(args)
        else:
            L, grads = load_reference(args.algebra)
            doc, code = COMMANDS[args.command](args, L, grads)
        _emit(doc, args.format, out)
        return code
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except MathFailure as exc:
        err.write(f"failure: {exc}\n")
        return 1
    except LiebError as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
