"""Report the limit homogeneous bivector spaces of a graded catalog algebra.

For each Λ² degree whose Λ³ partner degree is empty, print the fiber basis and
check that the basis and a batch of random rational combinations solve the CYBE.

    python3 scripts/limit_spaces.py so32 --samples 20 --seed 0
"""

from __future__ import annotations

import argparse
import json
import random
from fractions import Fraction

from lieb import catalog
from lieb.exterior import MultiVector, blade_label, schouten
from lieb.gradation import degree_key, induced_decomposition, limit_degrees


def report(name: str, params, gradation: int, samples: int, seed: int) -> dict:
    L, grads = catalog.get_algebra(name, params)
    G = grads[gradation]
    D = induced_decomposition(L, G, 2)
    rng = random.Random(seed)
    out = {}
    for d in limit_degrees(L, G):
        keys = D.blades[d]
        trials = [MultiVector(L, {k: 1}) for k in keys]
        trials += [
            MultiVector(L, {k: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for k in keys}) for _ in range(samples)
        ]
        out[degree_key(d)] = {
            "basis": [blade_label(L, k) for k in keys],
            "cybe": all(schouten(r, r).is_zero() for r in trials),
            "checked": len(trials),
        }
    return {"algebra": L.name, "gradation": G.label, "limit_spaces": out}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("name", help="catalog entry, e.g. so22 or so32")
    p.add_argument("--params", help="comma-separated rational parameters")
    p.add_argument("--gradation", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    params = None if a.params is None else a.params.split(",")
    print(json.dumps(report(a.name, params, a.gradation, a.samples, a.seed), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
