"""Built-in algebras, their gradations and expected-result fixtures.

Each entry lives in data/<name>.json. Coefficients and degrees may be
expressions in the entry's parameters (e.g. "lam"), evaluated exactly at
instantiation time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Sequence

from ..algebra import LieAlgebra, load_algebra
from ..errors import BadParameter, InputError, UnknownName
from ..gradation import Gradation, make_gradation
from ..linalg import frac, frac_str
from .expr import evaluate, multivector, scalar

__all__ = [
    "CatalogEntry",
    "FixtureSet",
    "entry",
    "evaluate",
    "expected_results",
    "get_algebra",
    "list_names",
    "multivector",
    "parse_reference",
    "scalar",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    params: tuple[dict, ...]
    samples: tuple[tuple[Fraction, ...], ...]
    doc: dict = field(repr=False, compare=False)

    def check_params(self, params: Sequence | None) -> tuple[Fraction, ...]:
        params = tuple(params or ())
        if len(params) != len(self.params):
            raise BadParameter(f"{self.name} takes {len(self.params)} parameter(s), got {len(params)}")
        out = []
        for spec, p in zip(self.params, params):
            try:
                x = frac(p)
            except InputError as exc:
                raise BadParameter(f"parameter {spec['name']} must be rational, got {p!r}") from exc
            if not evaluate(spec["constraint"], {spec["name"]: x}):
                raise BadParameter(f"{self.name}: {spec['name']} = {frac_str(x)} violates {spec['constraint']}")
            out.append(x)
        return tuple(out)

    def env(self, params: Sequence | None) -> dict[str, Fraction]:
        vals = self.check_params(params)
        return {spec["name"]: v for spec, v in zip(self.params, vals)}

    def param_sets(self) -> list[tuple[Fraction, ...]]:
        return list(self.samples) if self.params else [()]


@dataclass(frozen=True)
class FixtureSet:
    name: str
    params: tuple[Fraction, ...]
    fixtures: tuple[dict, ...]

    def of_kind(self, kind: str) -> list[dict]:
        return [f for f in self.fixtures if f["kind"] == kind]


def _data_dir():
    return resources.files(__package__) / "data"


@lru_cache(maxsize=None)
def list_names() -> tuple[str, ...]:
    return tuple(sorted(p.name[: -len(".json")] for p in _data_dir().iterdir() if p.name.endswith(".json")))


@lru_cache(maxsize=None)
def entry(name: str) -> CatalogEntry:
    if name not in list_names():
        raise UnknownName(f"unknown catalog entry {name!r}; known: {', '.join(list_names())}")
    doc = json.loads((_data_dir() / f"{name}.json").read_text(encoding="utf-8"))
    params = tuple(doc.get("params", []))
    samples = tuple(tuple(frac(x) for x in s) for s in doc.get("samples", []))
    return CatalogEntry(name, doc.get("title", name), params, samples, doc)


def _algebra_document(e: CatalogEntry, env: dict) -> dict:
    alg = e.doc["algebra"]
    basis = list(alg["basis"])
    pos = {b: i + 1 for i, b in enumerate(basis)}
    brackets = []
    for a, b, res in alg["brackets"]:
        vals = {str(pos[k]): frac_str(scalar(v, env)) for k, v in res.items()}
        brackets.append({"i": pos[a], "j": pos[b], "result": vals})
    suffix = "" if not env else "[" + ",".join(frac_str(v) for v in env.values()) + "]"
    return {"name": e.name + suffix, "basis": basis, "brackets": brackets}


def _degrees(raw: Sequence, env: dict) -> list[list[Fraction]]:
    out = []
    for d in raw:
        d = d if isinstance(d, list) else [d]
        out.append([scalar(x, env) for x in d])
    return out


def gradation_specs(name: str, params: Sequence | None = None) -> list[dict]:
    """Gradation documents of an entry with degrees evaluated, plus their root flags."""
    e = entry(name)
    env = e.env(params)
    out = []
    for g in e.doc.get("gradations", []):
        root = g.get("root")
        if isinstance(root, str):
            root = bool(evaluate(root, env))
        out.append({**g, "degrees": _degrees(g["degrees"], env), "root": root})
    return out


@lru_cache(maxsize=None)
def _build(name: str, params: tuple[Fraction, ...]) -> tuple[LieAlgebra, tuple[Gradation, ...]]:
    e = entry(name)
    env = e.env(params)
    L = load_algebra(_algebra_document(e, env))
    grads = tuple(
        make_gradation(L, g["group"]["moduli"], g["degrees"], g.get("label", ""))
        for g in gradation_specs(name, params)
    )
    return L, grads


def get_algebra(name: str, params: Sequence | None = None) -> tuple[LieAlgebra, list[Gradation]]:
    """Validated algebra and its gradations."""
    e = entry(name)
    L, grads = _build(name, e.check_params(params))
    return L, list(grads)


def expected_results(name: str, params: Sequence | None = None) -> FixtureSet:
    """Fixtures of an entry; those guarded by a "when" clause are filtered for params."""
    e = entry(name)
    vals = e.check_params(params)
    env = e.env(vals)
    fx = tuple(f for f in e.doc.get("fixtures", []) if "when" not in f or evaluate(f["when"], env))
    return FixtureSet(name, vals, fx)


def parse_reference(ref: str) -> tuple[str, tuple[Fraction, ...] | None]:
    """'catalog:NAME' or 'catalog:NAME:p1,p2' -> (NAME, params or None)."""
    if not ref.startswith("catalog:"):
        raise InputError(f"not a catalog reference: {ref!r}")
    rest = ref[len("catalog:") :]
    name, _, ps = rest.partition(":")
    if not ps:
        return name, None
    try:
        return name, tuple(frac(p) for p in ps.split(","))
    except InputError as exc:
        raise BadParameter(f"bad parameter list {ps!r}") from exc


def default_params(name: str) -> tuple[Fraction, ...]:
    e = entry(name)
    return e.samples[0] if e.params else ()


def to_json_value(x: Any) -> Any:
    """Render fixture data canonically (rationals as strings)."""
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, dict):
        return {str(k): to_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json_value(v) for v in x]
    return x
