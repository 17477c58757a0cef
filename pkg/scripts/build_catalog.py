"""Regenerate src/lieb/catalog/data/*.json from the entry definitions below.

Homogeneous bases of so(2,2) and so(3,2) are read from scripts/data/homogeneous_bases.json.
"""

from __future__ import annotations

import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "src", "lieb", "catalog", "data")
T = json.load(open(os.path.join(HERE, "data", "homogeneous_bases.json")))
E3 = ["e1", "e2", "e3"]
GRID = {"kind": "grid", "low": -2, "high": 2}

def killing(m, mat, anchor, source="reference"):
    return {"kind": "killing", "grade": m, "matrix": mat, "anchor": anchor, "source": source}

def inv(m, basis, anchor, source="reference", **kw):
    return {"kind": "invariants", "grade": m, "basis": basis, "anchor": anchor, "source": source, **kw}

def decomp(g, m, bases, anchor, source="reference", **kw):
    return {"kind": "decomposition", "gradation": g, "grade": m, "bases": bases, "anchor": anchor, "source": source, **kw}

def cybe(elems, anchor, source="reference", modified=False):
    f = {"kind": "cybe", "elements": elems, "anchor": anchor, "source": source}
    if modified: f["modified"] = True
    return f

def residual(expr, anchor):
    return {"kind": "residual", "expr": expr, "grid": GRID, "anchor": anchor, "source": "reference"}

def res_inv(anchor):
    return {"kind": "residual_invariant", "grid": GRID, "anchor": anchor, "source": "reference"}

def auto(images, env, anchor, expect=True, lambda2=None, reduced2=None, **kw):
    f = {"kind": "automorphism", "images": images, "env": env, "is_automorphism": expect, "anchor": anchor, "source": "reference", **kw}
    if lambda2: f["lambda2"] = lambda2
    if reduced2: f["reduced2"] = reduced2
    return f

def derivs(der, inner, anchor, source="reference"):
    return {"kind": "derivations", "der": der, "inner": inner, "anchor": anchor, "source": source}

def forms(m, k, sym, anchor, dim=None, basis=None, support=None, source="reference", **kw):
    f = {"kind": "invariant_forms", "grade": m, "arity": k, "symmetry": sym, "anchor": anchor, "source": source, **kw}
    if dim is not None: f["dim"] = dim
    if basis is not None: f["basis"] = basis
    if support is not None: f["support"] = support
    return f

def entry(name, title, basis, brackets, gradations, fixtures, params=None, samples=None, notes=None):
    d = {"name": name, "title": title}
    if params:
        d["params"] = params
        d["samples"] = samples
    d["algebra"] = {"basis": basis, "brackets": brackets}
    d["gradations"] = gradations
    if notes: d["notes"] = notes
    d["fixtures"] = fixtures
    with open(os.path.join(OUT, name + ".json"), "w") as fh:
        json.dump(d, fh, indent=1, ensure_ascii=False)
        fh.write("\n")

def Z(degrees, root, label="Z", note=None, moduli=None):
    rank = len(degrees[0]) if isinstance(degrees[0], list) else 1
    g = {"label": label, "group": {"moduli": moduli or [0] * rank}, "degrees": degrees, "root": root}
    if note: g["note"] = note
    return g

ORBIT_GENERIC = [["e12", 2], ["e13", 2], ["e23", 2], ["e12+e13", 2], ["3*e12-2*e23+e13", 2], ["0", 0]]
ORBIT_REDUCED = [["e12", 1], ["e13", 1], ["3*e12-2*e13", 1], ["e23", 0], ["0", 0]]

# sl2
entry("sl2", "sl2", E3, [["e1", "e2", {"e2": "1"}], ["e1", "e3", {"e3": "-1"}], ["e3", "e2", {"e1": "-1"}]],
      [Z(["0", "1", "-1"], True)],
      [killing(1, [[2, 0, 0], [0, 0, 2], [0, 2, 0]], "Killing metric of sl2"),
       killing(2, [[0, 4, 0], [4, 0, 0], [0, 0, -4]], "double Killing metric of sl2"),
       killing(3, [[-8]], "triple Killing metric of sl2"),
       inv(2, [], "sl2 has no nonzero invariant bivectors"),
       inv(3, ["e123"], "every trivector of sl2 is invariant"),
       res_inv("every bivector of sl2 solves the mCYBE"),
       {"kind": "orbit_dim", "elements": ORBIT_GENERIC, "anchor": "inner orbits on the bivectors of sl2 are two-dimensional off the origin", "source": "reference"},
       {"kind": "separator", "form": "killing", "grade": 2, "expr": "8*x*y-4*z**2", "grid": GRID, "anchor": "quadratic function of the double Killing metric of sl2", "source": "reference"},
       derivs(3, 3, "every derivation of sl2 is inner"),
       forms(1, 2, "symmetric", "invariant symmetric bilinear forms on sl2 are multiples of the Killing form", basis=[[[2, 0, 0], [0, 0, 2], [0, 2, 0]]], source="derived"),
       decomp(0, 1, {"0": ["e1"], "1": ["e2"], "-1": ["e3"]}, "root Z-gradation of sl2"),
       decomp(0, 2, {"0": ["e23"], "1": ["e12"], "-1": ["e13"]}, "induced decomposition of the bivectors of sl2"),
       decomp(0, 3, {"0": ["e123"]}, "induced decomposition of the trivectors of sl2"),
       cybe(["e12", "e13"], "CYBE solutions read off the sl2 gradation"),
       auto(["e1", "-e2", "-e3"], {}, "outer sign-flip automorphism of sl2",
            lambda2={"e12": "-e12", "e13": "-e13", "e23": "e23"}),
       ])

# su2
entry("su2", "su2", E3, [["e1", "e2", {"e3": "1"}], ["e1", "e3", {"e2": "-1"}], ["e3", "e2", {"e1": "-1"}]],
      [Z(["0", "1", "1"], False, "Z2", "the axis e_a of degree 0 is an arbitrary choice; this representative takes a = 1", moduli=[2])],
      [killing(1, [[-2, 0, 0], [0, -2, 0], [0, 0, -2]], "Killing metric of su2"),
       killing(2, [[4, 0, 0], [0, 4, 0], [0, 0, 4]], "double Killing metric of su2"),
       killing(3, [[-8]], "triple Killing metric of su2"),
       inv(2, [], "su2 has no nonzero invariant bivectors"),
       inv(3, ["e123"], "every trivector of su2 is invariant"),
       res_inv("every bivector of su2 solves the mCYBE"),
       {"kind": "orbit_dim", "elements": ORBIT_GENERIC, "anchor": "inner orbits on the bivectors of su2 are two-dimensional off the origin", "source": "reference"},
       {"kind": "separator", "form": "killing", "grade": 2, "expr": "4*(x**2+y**2+z**2)", "grid": GRID, "anchor": "quadratic function of the double Killing metric of su2", "source": "reference"},
       derivs(3, 3, "every derivation of su2 is inner", source="derived"),
       decomp(0, 1, {"0": ["e1"], "1": ["e2", "e3"]}, "Z2-gradation of su2"),
       decomp(0, 2, {"0": ["e23"], "1": ["e12", "e13"]}, "induced decomposition of the bivectors of su2"),
       decomp(0, 3, {"0": ["e123"]}, "induced decomposition of the trivectors of su2"),
       ])

# Heisenberg
HNOTE = ("<e12, e13> is not invariant since [e1, e12]_S = e13. The invariant plane is "
         "<e13, e23> = z ^ g, consistent with the nilpotent generator rule and with [e12] being the nonzero reduced class")
entry("h", "Heisenberg algebra", E3, [["e1", "e2", {"e3": "1"}]],
      [Z(["1", "2", "3"], False)],
      [killing(1, [[0, 0, 0], [0, 0, 0], [0, 0, 0]], "the Killing form of a nilpotent algebra vanishes"),
       inv(2, ["e13", "e23"], "invariant bivectors of the Heisenberg algebra", source="corrected",
           rejected_value=["e12", "e13"], note=HNOTE),
       inv(3, ["e123"], "every trivector of the Heisenberg algebra is invariant"),
       res_inv("every bivector of the Heisenberg algebra solves the mCYBE"),
       derivs(6, 2, "derivations of the Heisenberg algebra", source="derived"),
       {"kind": "structure", "nilpotent": True, "solvable": True, "lower_central_dims": [3, 1, 0], "center": ["e3"],
        "anchor": "the Heisenberg algebra is nilpotent of step two", "source": "reference"},
       forms(1, 2, "none", "invariant bilinear forms on the Heisenberg algebra fill the upper-left 2x2 block",
             dim=4, support=[[1, 1], [1, 2], [2, 1], [2, 2]]),
       forms(2, 2, "symmetric", "symmetric invariant forms on the bivectors of the Heisenberg algebra",
             basis=[[[1, 0, 0], [0, 0, 0], [0, 0, 0]]]),
       forms(2, 2, "none", "invariant bilinear forms on the bivectors of the Heisenberg algebra", source="corrected",
             basis=[[[1, 0, 0], [0, 0, 0], [0, 0, 0]], [[0, 1, 0], [-1, 0, 0], [0, 0, 0]], [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]],
             note="a five-parameter family only records necessary conditions; entries (1,3) and (3,1) "
                  "must be opposite, and (1,2), (2,1) likewise, so the space has dimension 3"),
       forms(2, 2, "antisymmetric", "antisymmetric invariant forms on the bivectors of the Heisenberg algebra", source="corrected",
             basis=[[[0, 1, 0], [-1, 0, 0], [0, 0, 0]], [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]],
             note="besides the family (2,1) = -(1,2), the pair (1,3) = -(3,1) is also invariant"),
       {"kind": "extension", "form": [["a1", "a2", "0"], ["a3", "a4", "0"], ["0", "0", "0"]],
        "env": {"a1": "2", "a2": "3", "a3": "5", "a4": "7"},
        "expected": {"2": [["a1*a4-a2*a3", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]], "3": [["0"]]},
        "anchor": "extension of a general invariant bilinear form of the Heisenberg algebra", "source": "reference"},
       decomp(0, 1, {"1": ["e1"], "2": ["e2"], "3": ["e3"]}, "Z-gradation of the Heisenberg algebra"),
       decomp(0, 2, {"3": ["e12"], "4": ["e13"], "5": ["e23"]}, "induced decomposition of the bivectors"),
       decomp(0, 3, {"6": ["e123"]}, "induced decomposition of the trivectors"),
       cybe(["e13", "e23"], "CYBE solutions read off the Heisenberg gradation"),
       cybe(["e12"], "e12 solves the mCYBE; its residual 2e123 is invariant but nonzero", source="reference", modified=True),
       {"kind": "nilpotent_generators", "grade": 2, "basis": ["e13", "e23"],
        "anchor": "z ^ g_(p-2) generates invariant bivectors of a nilpotent algebra with one-dimensional center", "source": "derived"},
       {"kind": "bridge", "ideal": ["e1", "e3"], "omega": "e13", "anchor": "traceless ideals give decomposable invariants", "source": "derived"},
       {"kind": "bridge", "ideal": ["e2", "e3"], "omega": "e23", "anchor": "traceless ideals give decomposable invariants", "source": "derived"},
       {"kind": "reduced_dim", "grade": 2, "dim": 1, "labels": ["[e12]"], "anchor": "the reduced bivectors of the Heisenberg algebra are spanned by [e12]", "source": "reference"},
       auto(["alpha*e1", "e2", "alpha*e3"], {"alpha": "3"}, "scaling automorphisms of the Heisenberg algebra",
            lambda2={"e12": "alpha*e12"}, reduced2={"e12": "alpha*e12"}),
       ])

# r'_{3,0}
ACTION_NOTE = ("the kernels listed for e2 and e3 are kernels of v -> [e_i, v]_S on the coset representatives "
               "e12, e13 before projection; after projection both maps vanish and their kernels are the whole reduced space")
entry("r3_0p", "r'_{3,0}", E3, [["e1", "e2", {"e3": "-1"}], ["e1", "e3", {"e2": "1"}]],
      [Z(["0", "1", "1"], False)],
      [inv(2, ["e23"], "invariant bivectors of r'_{3,0}"),
       inv(3, ["e123"], "every trivector of r'_{3,0} is invariant"),
       res_inv("every bivector of r'_{3,0} solves the mCYBE"),
       decomp(0, 1, {"0": ["e1"], "1": ["e2", "e3"]}, "Z-gradation of r'_{3,0}"),
       decomp(0, 2, {"1": ["e12", "e13"], "2": ["e23"]}, "induced decomposition of the bivectors"),
       decomp(0, 3, {"2": ["e123"]}, "induced decomposition of the trivectors"),
       cybe(["e23"], "CYBE solutions read off the r'_{3,0} gradation"),
       {"kind": "reduced_dim", "grade": 2, "dim": 2, "labels": ["[e12]", "[e13]"], "anchor": "basis of the reduced bivectors of r'_{3,0}", "source": "reference"},
       {"kind": "action_table", "grade": 2,
        "table": {"e1": {"image": ["e12", "e13"], "kernel": []},
                  "e2": {"image": [], "kernel": ["e13"]},
                  "e3": {"image": [], "kernel": ["e12"]}},
        "reduced_kernel": {"e1": [], "e2": ["e12", "e13"], "e3": ["e12", "e13"]},
        "note": ACTION_NOTE,
        "anchor": "images and kernels of the reduced adjoint action on the reduced bivectors of r'_{3,0}", "source": "reference"},
       {"kind": "reduced_forms", "grade": 2, "arity": 2, "symmetry": "symmetric", "family": [[[1, 0], [0, 1]]],
        "separator": "x**2+y**2", "grid": GRID, "anchor": "invariant metrics on the reduced bivectors of r'_{3,0} are scalar", "source": "reference"},
       {"kind": "orbit_dim", "reduced": True, "elements": ORBIT_REDUCED, "anchor": "reduced inner orbits of r'_{3,0} are circles", "source": "reference"},
       {"kind": "bridge", "ideal": ["e2", "e3"], "omega": "e23", "anchor": "traceless ideals give decomposable invariants", "source": "derived"},
       auto(["e1", "alpha*e2", "alpha*e3"], {"alpha": "-2"}, "scaling automorphisms of r'_{3,0}",
            lambda2={"e12": "alpha*e12"}, reduced2={"e12": "alpha*e12", "e13": "alpha*e13"}),
       ])

# r_{3,-1}
entry("r3_m1", "r_{3,-1}", E3, [["e1", "e2", {"e2": "1"}], ["e1", "e3", {"e3": "-1"}]],
      [Z(["0", "1", "-1"], True)],
      [inv(2, ["e23"], "invariant bivectors of r_{3,-1}"),
       inv(3, ["e123"], "every trivector of r_{3,-1} is invariant"),
       res_inv("every bivector of r_{3,-1} solves the mCYBE"),
       decomp(0, 1, {"-1": ["e3"], "0": ["e1"], "1": ["e2"]}, "root Z-gradation of r_{3,-1}"),
       decomp(0, 2, {"-1": ["e13"], "0": ["e23"], "1": ["e12"]}, "induced decomposition of the bivectors"),
       decomp(0, 3, {"0": ["e123"]}, "induced decomposition of the trivectors"),
       cybe(["e12", "e13"], "CYBE solutions read off the r_{3,-1} gradation"),
       {"kind": "reduced_dim", "grade": 2, "dim": 2, "labels": ["[e12]", "[e13]"], "anchor": "basis of the reduced bivectors of r_{3,-1}", "source": "reference"},
       {"kind": "reduced_forms", "grade": 2, "arity": 2, "symmetry": "symmetric", "family": [[[0, 1], [1, 0]]],
        "separator": "2*x*y", "grid": GRID, "anchor": "invariant metrics on the reduced bivectors of r_{3,-1} are antidiagonal", "source": "reference"},
       {"kind": "orbit_dim", "reduced": True, "elements": ORBIT_REDUCED, "anchor": "reduced inner orbits of r_{3,-1} are one-dimensional off the origin", "source": "reference"},
       {"kind": "bridge", "ideal": ["e2", "e3"], "omega": "e23", "anchor": "traceless ideals give decomposable invariants", "source": "derived"},
       auto(["e1+2*e2-e3", "alpha*e2", "beta*e3"], {"alpha": "2", "beta": "-3"}, "automorphisms T of r_{3,-1} with v = 2e2 - e3",
            reduced2={"e12": "alpha*e12", "e13": "beta*e13"}),
       auto(["-e1+e2+e3", "alpha*e3", "beta*e2"], {"alpha": "2", "beta": "-3"}, "swap automorphisms T' of r_{3,-1} with v = e2 + e3",
            reduced2={"e12": "-alpha*e13", "e13": "-beta*e12"}),
       ])

# r_{3,1}
entry("r3_1", "r_{3,1}", E3, [["e1", "e2", {"e2": "1"}], ["e1", "e3", {"e3": "1"}]],
      [Z(["0", "1", "1"], True), Z([["0", "0"], ["1", "0"], ["0", "1"]], False, "Z2-free")],
      [inv(2, [], "r_{3,1} has no nonzero invariant bivectors"),
       inv(3, [], "r_{3,1} has no nonzero invariant trivectors"),
       residual("0", "the Schouten square vanishes on every bivector of r_{3,1}"),
       decomp(0, 1, {"0": ["e1"], "1": ["e2", "e3"]}, "root Z-gradation of r_{3,1}"),
       decomp(0, 2, {"1": ["e12", "e13"], "2": ["e23"]}, "induced Z decomposition of the bivectors"),
       decomp(0, 3, {"2": ["e123"]}, "induced Z decomposition of the trivectors"),
       decomp(1, 1, {"0,0": ["e1"], "1,0": ["e2"], "0,1": ["e3"]}, "Z^2-gradation of r_{3,1}"),
       decomp(1, 2, {"1,0": ["e12"], "0,1": ["e13"], "1,1": ["e23"]}, "induced Z^2 decomposition of the bivectors"),
       decomp(1, 3, {"1,1": ["e123"]}, "induced Z^2 decomposition of the trivectors"),
       cybe(["e12", "e13", "e23"], "CYBE solutions read off the r_{3,1} gradations"),
       forms(2, 2, "none", "r_{3,1} admits no invariant bilinear forms on its bivectors", dim=0),
       {"kind": "fields", "fields": [["x", "y", "2*z"], ["0", "0", "y"], ["0", "0", "x"]],
        "anchor": "fundamental vector fields of the inner action of r_{3,1} on its bivectors", "source": "reference"},
       {"kind": "structure", "derived": ["e2", "e3"], "anchor": "derived ideal of r_{3,1}", "source": "reference"},
       auto(["e1", "alpha*e2+beta*e3", "gamma*e2+delta*e3"], {"alpha": "1", "beta": "2", "gamma": "3", "delta": "4"},
            "GL(2) block automorphisms of r_{3,1}", lambda2={"e23": "(alpha*delta-beta*gamma)*e23"}),
       ])

# r_3
entry("r3", "r_3", E3, [["e1", "e3", {"e1": "-1"}], ["e3", "e2", {"e1": "1", "e2": "1"}]],
      [Z(["1", "1", "0"], False)],
      [inv(2, [], "r_3 has no nonzero invariant bivectors"),
       inv(3, [], "r_3 has no nonzero invariant trivectors"),
       residual("-2*z**2", "mCYBE residual of r_3"),
       decomp(0, 1, {"0": ["e3"], "1": ["e1", "e2"]}, "Z-gradation of r_3"),
       decomp(0, 2, {"1": ["e13", "e23"], "2": ["e12"]}, "induced decomposition of the bivectors"),
       decomp(0, 3, {"2": ["e123"]}, "induced decomposition of the trivectors"),
       cybe(["e12", "-e12", "e13"], "r-matrix representatives of r_3"),
       forms(2, 2, "symmetric", "r_3 admits no nonzero invariant metrics on its bivectors", dim=0),
       {"kind": "fields", "fields": [["z", "0", "0"], ["-y+z", "0", "0"], ["2*x", "y+z", "z"]],
        "anchor": "fundamental vector fields of the inner action of r_3 on its bivectors", "source": "reference"},
       {"kind": "structure", "derived": ["e1", "e2"], "anchor": "derived ideal of r_3", "source": "reference"},
       auto(["alpha*e1", "alpha*e2+beta*e1", "e3"], {"alpha": "2", "beta": "5"}, "automorphisms of r_3 with v = 0",
            lambda2={"e12": "alpha**2*e12", "e13": "alpha*e13", "e23": "alpha*e23+beta*e13"}),
       auto(["alpha*e1", "alpha*e2+beta*e1", "e3+e1-2*e2"], {"alpha": "2", "beta": "5"}, "automorphisms of r_3 with v = e1 - 2e2",
            lambda2={"e12": "alpha**2*e12", "e23": "alpha*e23+beta*e13+((alpha*e2+beta*e1)^(e1-2*e2))"},
            note="the image of e13 carries the extra term alpha*e1^v; only e12 and e23 are listed for v != 0"),
       ])

# r_{3,lambda}
LAM = [{"name": "lam", "constraint": "-1 < lam < 1"}]
entry("r3_lambda", "r_{3,lambda}", E3, [["e1", "e3", {"e1": "-1"}], ["e3", "e2", {"e2": "lam"}]],
      [Z(["1", "lam", "0"], "lam != 0", "R",
         "degrees are rational at instantiation; for lam = 0 the degree-zero part is <e2, e3>, so the root property needs lam != 0")],
      [inv(2, [], "r_{3,lambda} has no nonzero invariant bivectors"),
       inv(3, [], "r_{3,lambda} has no nonzero invariant trivectors"),
       residual("2*(lam-1)*y*z", "mCYBE residual of r_{3,lambda}"),
       dict(decomp(0, 1, {"1": ["e1"], "lam": ["e2"], "0": ["e3"]}, "root R-gradation of r_{3,lambda}"), when="lam != 0"),
       dict(decomp(0, 2, {"1": ["e13"], "lam": ["e23"], "1+lam": ["e12"]}, "induced decomposition of the bivectors"), when="lam != 0"),
       dict(decomp(0, 3, {"1+lam": ["e123"]}, "induced decomposition of the trivectors"), when="lam != 0"),
       cybe(["e12", "e13", "e23"], "CYBE solutions read off the r_{3,lambda} gradation"),
       {"kind": "fields", "when": "lam != 0", "fields": [["z", "0", "0"], ["-lam*y", "0", "0"], ["(1+lam)*x", "y", "lam*z"]],
        "anchor": "fundamental vector fields of the inner action of r_{3,lambda} on its bivectors", "source": "reference"},
       {"kind": "fields", "when": "lam == 0", "fields": [["z", "0", "0"], ["0", "0", "0"], ["x", "y", "0"]],
        "anchor": "fundamental vector fields of the inner action of r_{3,0} on its bivectors", "source": "reference"},
       {"kind": "structure", "when": "lam != 0", "derived": ["e1", "e2"], "anchor": "derived ideal of r_{3,lambda}", "source": "reference"},
       auto(["beta*e1", "alpha*e2", "e3"], {"alpha": "2", "beta": "-3"}, "diagonal automorphisms of r_{3,lambda}",
            lambda2={"e12": "alpha*beta*e12", "e13": "beta*e13", "e23": "alpha*e23"}),
       dict(auto(["alpha*e1", "beta*e2", "e3"], {"alpha": "2", "beta": "-3"}, "automorphisms T of r_{3,0} with gamma = 0"), when="lam == 0"),
       dict(auto(["alpha*e1+gamma*e2", "beta*e2", "e3"], {"alpha": "2", "beta": "-3", "gamma": "1"},
                 "maps T of r_{3,0} with gamma != 0", expect=False, source="corrected",
                 note="[T e1, T e3] = -alpha e1 while T[e1, e3] = -alpha e1 - gamma e2, so gamma must vanish"), when="lam == 0"),
       ], params=LAM, samples=[["1/2"], ["-1/2"], ["0"]])

# r'_{3,lambda}
entry("r3_lambda_p", "r'_{3,lambda}", E3, [["e1", "e3", {"e2": "1", "e1": "-lam"}], ["e3", "e2", {"e2": "lam", "e1": "1"}]],
      [Z(["1", "1", "0"], False)],
      [inv(2, [], "r'_{3,lambda} has no nonzero invariant bivectors"),
       inv(3, [], "r'_{3,lambda} has no nonzero invariant trivectors"),
       residual("-2*(y**2+z**2)", "mCYBE residual of r'_{3,lambda}"),
       decomp(0, 1, {"0": ["e3"], "1": ["e1", "e2"]}, "Z-gradation of r'_{3,lambda}"),
       decomp(0, 2, {"1": ["e13", "e23"], "2": ["e12"]}, "induced decomposition of the bivectors"),
       decomp(0, 3, {"2": ["e123"]}, "induced decomposition of the trivectors"),
       cybe(["e12", "-e12"], "CYBE solutions read off the r'_{3,lambda} gradation"),
       auto(["alpha*e1", "alpha*e2", "e3"], {"alpha": "-3"}, "scaling automorphisms of r'_{3,lambda}",
            lambda2={"e12": "alpha**2*e12"}),
       ], params=[{"name": "lam", "constraint": "lam != 0"}], samples=[["1/2"], ["-1/2"], ["2"]])

# so(2,2)
SO22 = ["em", "e0", "ep", "fm", "f0", "fp"]
so22_br = [["e0", "ep", {"ep": "1"}], ["e0", "em", {"em": "-1"}], ["ep", "em", {"e0": "1"}],
           ["f0", "fp", {"fp": "1"}], ["f0", "fm", {"fm": "-1"}], ["fp", "fm", {"f0": "1"}]]
k22 = [[0] * 6 for _ in range(6)]
for a, b in ((1, 1), (0, 2), (2, 0), (4, 4), (3, 5), (5, 3)):
    k22[a][b] = 2
so22_lim = ["-1,-1", "-1,0", "-1,1", "0,-1", "0,1", "1,-1", "1,0", "1,1"]
entry("so22", "so(2,2)", SO22, so22_br,
      [Z([["-1", "0"], ["0", "0"], ["1", "0"], ["0", "-1"], ["0", "0"], ["0", "1"]], True, "Z2-root")],
      [killing(1, k22, "Killing values of so(2,2): 2 on e0 e0, f0 f0, e- e+ and f- f+"),
       decomp(0, 2, T["so22"]["2"], "bases of the homogeneous bivector spaces of so(2,2)"),
       decomp(0, 3, T["so22"]["3"], "bases of the homogeneous trivector spaces of so(2,2)"),
       {"kind": "limit_degrees", "gradation": 0, "degrees": so22_lim, "anchor": "limit homogeneous spaces of the bivectors of so(2,2)", "source": "reference"},
       {"kind": "limit_cybe", "gradation": 0, "anchor": "elements of limit homogeneous spaces solve the CYBE", "source": "reference"},
       cybe(["f0^e0"], "f0 ^ e0 solves the CYBE"),
       derivs(6, 6, "every derivation of so(2,2) is inner", source="derived"),
       ],
      notes=["the two sl2 copies follow the sl2 entry with (e0, e+, e-) in place of (e1, e2, e3); cross brackets vanish"])

# so(3,2)
SO32 = ["Jp", "Jm", "J3", "Kp", "Km", "K3", "Sp", "Sm", "Rp", "Rm"]
so32_br = [
 ["Jp", "Kp", {"Rp": "1"}], ["Jm", "Km", {"Rm": "-1"}], ["Jm", "Kp", {"Sp": "1"}], ["Jp", "Km", {"Sm": "-1"}],
 ["Jm", "Rp", {"Kp": "2"}], ["Jp", "Rm", {"Km": "-2"}], ["J3", "Rp", {"Rp": "1"}], ["J3", "Rm", {"Rm": "-1"}],
 ["Jp", "Sp", {"Kp": "2"}], ["Jm", "Sm", {"Km": "-2"}], ["J3", "Sp", {"Sp": "-1"}], ["J3", "Sm", {"Sm": "1"}],
 ["Km", "Rp", {"Jp": "2"}], ["Kp", "Rm", {"Jm": "-2"}], ["K3", "Rp", {"Rp": "1"}], ["K3", "Rm", {"Rm": "-1"}],
 ["Km", "Sp", {"Jm": "2"}], ["Kp", "Sm", {"Jp": "-2"}], ["K3", "Sp", {"Sp": "1"}], ["K3", "Sm", {"Sm": "-1"}],
 ["Sp", "Sm", {"K3": "-4", "J3": "4"}], ["Rp", "Rm", {"K3": "-4", "J3": "-4"}],
 ["Km", "Kp", {"K3": "2"}], ["Jm", "Jp", {"J3": "-2"}],
 ["J3", "Jp", {"Jp": "1"}], ["J3", "Jm", {"Jm": "-1"}], ["K3", "Kp", {"Kp": "1"}], ["K3", "Km", {"Km": "-1"}],
]
so32_deg = {"Jp": ["0", "1"], "Jm": ["0", "-1"], "J3": ["0", "0"], "Kp": ["1", "0"], "Km": ["-1", "0"], "K3": ["0", "0"],
            "Sp": ["1", "-1"], "Sm": ["-1", "1"], "Rp": ["1", "1"], "Rm": ["-1", "-1"]}
so32_lim = ["-2,-1", "-2,0", "-2,1", "-1,-2", "-1,2", "0,-2", "0,2", "1,-2", "1,2", "2,-1", "2,0", "2,1"]
entry("so32", "so(3,2)", SO32, so32_br,
      [Z([so32_deg[b] for b in SO32], True, "Z2-root",
         "degree (i, j) = (K3 eigenvalue, J3 eigenvalue); this orientation reproduces every cell of the bivector and trivector tables")],
      [{"kind": "bracket_values", "pairs": [["Rp", "Rm", "-4*K3-4*J3"], ["Sp", "Sm", "-4*K3+4*J3"], ["Km", "Kp", "2*K3"], ["Jm", "Jp", "-2*J3"]],
        "anchor": "sample commutation relations of so(3,2)", "source": "reference"},
       decomp(0, 2, T["so32"]["2"], "bases of the homogeneous bivector spaces of so(3,2)"),
       decomp(0, 3, T["so32"]["3"], "bases of the homogeneous trivector spaces of so(3,2)"),
       {"kind": "limit_degrees", "gradation": 0, "degrees": so32_lim, "anchor": "limit homogeneous spaces of the bivectors of so(3,2)", "source": "derived"},
       {"kind": "limit_cybe", "gradation": 0, "anchor": "elements of limit homogeneous spaces solve the CYBE", "source": "reference"},
       ],
      notes=["the brackets [J3, J+-] = +-J+-, [K3, K+-] = +-K+-, [K3, J+-] = 0 and [J+-, K3] = 0 complete the "
             "remaining relations; the Jacobi identity and the grading by (K3, J3) eigenvalues force them"])
print("written")
