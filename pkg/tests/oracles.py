"""Independent sympy oracles. Nothing here calls into lieb's linear algebra or brackets."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import sympy as sp
from sympy.combinatorics import Permutation


def _sort(seq):
    """Sign and sorted tuple of a sequence of indices (0 when repeated)."""
    if len(set(seq)) != len(seq):
        return 0, None
    perm = Permutation([sorted(seq).index(x) for x in seq])
    return (1 if perm.is_even else -1), tuple(sorted(seq))


def structure(L) -> dict:
    """{(i, j): {k: Rational}} for all ordered pairs, from the algebra's public bracket_basis."""
    out = {}
    for i in range(L.dim):
        for j in range(L.dim):
            out[(i, j)] = {k: sp.Rational(v.numerator, v.denominator) for k, v in L.bracket_basis(i, j).items()}
    return out


def wedge(a: dict, b: dict) -> dict:
    out: dict = {}
    for I, x in a.items():
        for J, y in b.items():
            s, K = _sort(I + J)
            if s:
                out[K] = out.get(K, 0) + s * x * y
    return {k: v for k, v in out.items() if v != 0}


def add(a: dict, b: dict, c=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v != 0}


def schouten_blades(C: dict, I: tuple, J: tuple) -> dict:
    """Schouten bracket of basis blades by the Leibniz recursion on the second slot."""
    if not I or not J:
        return {}
    if len(J) == 1:
        if len(I) == 1:
            return {(k,): v for k, v in C[(I[0], J[0])].items() if v != 0}
        # [X, y] = -[y, X] for grade-1 y
        return {k: -v for k, v in schouten_blades(C, J, I).items()}
    k = len(I)
    head, tail = J[:1], J[1:]
    first = wedge(schouten_blades(C, I, head), {tail: 1})
    second = wedge({head: 1}, schouten_blades(C, I, tail))
    return add(first, second, (-1) ** (k - 1))


def schouten(C: dict, a: dict, b: dict) -> dict:
    out: dict = {}
    for I, x in a.items():
        for J, y in b.items():
            out = add(out, {K: x * y * v for K, v in schouten_blades(C, I, J).items()})
    return out


def to_dict(w) -> dict:
    """lieb MultiVector -> {blade: Rational}."""
    return {k: sp.Rational(v.numerator, v.denominator) for k, v in w.terms.items()}


def ad_matrix(C: dict, n: int, i: int) -> sp.Matrix:
    M = sp.zeros(n, n)
    for j in range(n):
        for k, v in C[(i, j)].items():
            M[k, j] = v
    return M


def killing(C: dict, n: int) -> sp.Matrix:
    ads = [ad_matrix(C, n, i) for i in range(n)]
    return sp.Matrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())


def blades(n: int, m: int):
    return list(itertools.combinations(range(n), m))


def lambda_ad(C: dict, n: int, m: int, i: int) -> sp.Matrix:
    """Matrix of w -> [e_i, w]_S on Λ^m, columns are images."""
    bs = blades(n, m)
    pos = {b: r for r, b in enumerate(bs)}
    M = sp.zeros(len(bs), len(bs))
    for c, J in enumerate(bs):
        for K, v in schouten_blades(C, (i,), J).items():
            M[pos[K], c] = v
    return M


def invariant_rref(C: dict, n: int, m: int) -> sp.Matrix:
    """RREF basis (rows) of the common kernel of all Λ^m ad_{e_i}."""
    A = sp.Matrix.vstack(*[lambda_ad(C, n, m, i) for i in range(n)])
    ns = A.nullspace()
    if not ns:
        return sp.zeros(0, len(blades(n, m)))
    return sp.Matrix.hstack(*ns).T.rref()[0]


def extension_sum(B: sp.Matrix, Js: list, m: int):
    """(1/m!) Σ_{σ_1..σ_k} sg(σ_1..σ_k) Π_r B(e_{J_1(σ_1(r))}, .., e_{J_k(σ_k(r))}) for a k-tensor B."""
    total = sp.Integer(0)
    perms = list(itertools.permutations(range(m)))
    for choice in itertools.product(perms, repeat=len(Js)):
        sg = 1
        for p in choice:
            sg *= 1 if Permutation(list(p)).is_even else -1
        prod = sp.Integer(1)
        for r in range(m):
            prod *= B[tuple(J[p[r]] for J, p in zip(Js, choice))]
        total += sg * prod
    return total / math.factorial(m)


def extend_bilinear_det(B: sp.Matrix, n: int, m: int) -> sp.Matrix:
    bs = blades(n, m)
    return sp.Matrix(len(bs), len(bs), lambda a, b: B.extract(list(bs[a]), list(bs[b])).det())


@lru_cache(maxsize=None)
def nullity(rows: tuple, ncols: int) -> int:
    M = sp.Matrix(rows) if rows else sp.zeros(0, ncols)
    return ncols - M.rank()
