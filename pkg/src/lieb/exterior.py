"""Sparse multivectors on Λg: wedge, algebraic Schouten bracket, Λ^m of linear
maps and factor spans of decomposable elements."""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import EndoMap, LieAlgebra, binomial
from .errors import AlgebraMismatch, GradeMismatch, GradeOutOfRange, MixedGrade, ParseError, ZeroInput
from .linalg import ZERO, Subspace, det, frac, frac_str, zeros

Blade = tuple[int, ...]


@lru_cache(maxsize=None)
def blades(n: int, m: int) -> tuple[Blade, ...]:
    """Canonical (lexicographic) basis of Λ^m for a dim-n algebra."""
    return tuple(itertools.combinations(range(n), m))


@lru_cache(maxsize=None)
def blade_index(n: int, m: int) -> dict[Blade, int]:
    return {b: i for i, b in enumerate(blades(n, m))}


def sort_sign(seq: Sequence[int]) -> tuple[int, Blade | None]:
    """Sign of the permutation sorting seq, and the sorted tuple; (0, None) on repeats."""
    if len(set(seq)) != len(seq):
        return 0, None
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s, tuple(sorted(seq))


class MultiVector:
    """Element of Λg as {strictly increasing index tuple: nonzero rational}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LieAlgebra, terms: Mapping[Blade, object] | None = None):
        self.algebra = algebra
        clean: dict[Blade, Fraction] = {}
        n = algebra.dim
        for key, c in (terms or {}).items():
            key = tuple(key)
            c = frac(c)
            if not c:
                continue
            if any(not 0 <= i < n for i in key):
                raise GradeOutOfRange(f"index out of range in {key}")
            s, k = sort_sign(key)
            if s == 0:
                continue
            clean[k] = clean.get(k, ZERO) + s * c
            if not clean[k]:
                del clean[k]
        self.terms = dict(sorted(clean.items(), key=lambda kv: (len(kv[0]), kv[0])))

    # construction
    @classmethod
    def scalar(cls, L: LieAlgebra, c=1) -> MultiVector:
        return cls(L, {(): c})

    @classmethod
    def basis(cls, L: LieAlgebra, *indices: int) -> MultiVector:
        return cls(L, {tuple(indices): 1})

    @classmethod
    def from_coords(cls, L: LieAlgebra, m: int, coords: Sequence) -> MultiVector:
        bs = blades(L.dim, m)
        if len(coords) != len(bs):
            raise GradeMismatch(f"expected {len(bs)} coordinates for grade {m}")
        return cls(L, {b: c for b, c in zip(bs, coords) if c})

    # inspection
    def grades(self) -> set[int]:
        return {len(k) for k in self.terms}

    def grade(self) -> int:
        """The grade of a homogeneous nonzero element (0 for the zero element)."""
        g = self.grades()
        if len(g) > 1:
            raise MixedGrade(f"element has grades {sorted(g)}")
        return g.pop() if g else 0

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def component(self, m: int) -> MultiVector:
        return MultiVector(self.algebra, {k: c for k, c in self.terms.items() if len(k) == m})

    def coords(self, m: int) -> list[Fraction]:
        idx = blade_index(self.algebra.dim, m)
        out = [ZERO] * len(idx)
        for k, c in self.terms.items():
            if len(k) == m:
                out[idx[k]] = c
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # arithmetic
    def _check(self, other: MultiVector) -> None:
        if not isinstance(other, MultiVector):
            raise TypeError("expected a MultiVector")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("multivectors over different algebras")

    def __add__(self, other: MultiVector) -> MultiVector:
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, ZERO) + c
        return MultiVector(self.algebra, t)

    def __neg__(self) -> MultiVector:
        return MultiVector(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: MultiVector) -> MultiVector:
        return self + (-other)

    def __mul__(self, c) -> MultiVector:
        if isinstance(c, MultiVector):
            return NotImplemented
        c = frac(c)
        return MultiVector(self.algebra, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: MultiVector) -> MultiVector:
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiVector({format_multivector(self)!r})"

    def to_json(self) -> dict:
        return {"terms": {",".join(str(i + 1) for i in k): frac_str(c) for k, c in self.terms.items()}}


def _merge(a: Blade, b: Blade) -> tuple[int, Blade | None]:
    return sort_sign(a + b)


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    a._check(b)
    out: dict[Blade, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            s, k = _merge(ka, kb)
            if s:
                out[k] = out.get(k, ZERO) + s * ca * cb
    return MultiVector(a.algebra, out)


def wedge_all(L: LieAlgebra, vectors: Iterable[MultiVector]) -> MultiVector:
    out = MultiVector.scalar(L)
    for v in vectors:
        out = wedge(out, v)
    return out


@lru_cache(maxsize=200_000)
def _schouten_blades(L: LieAlgebra, I: Blade, J: Blade) -> tuple[tuple[Blade, Fraction], ...]:
    out: dict[Blade, Fraction] = {}
    for a, i in enumerate(I):
        i_rest = I[:a] + I[a + 1 :]
        for b, j in enumerate(J):
            br = L.bracket_basis(i, j)
            if not br:
                continue
            s1, rest = _merge(i_rest, J[:b] + J[b + 1 :])
            if not s1:
                continue
            sign = -s1 if (a + b) % 2 else s1
            for k, c in br.items():
                s2, key = _merge((k,), rest)
                if s2:
                    out[key] = out.get(key, ZERO) + sign * s2 * c
    return tuple((k, c) for k, c in out.items() if c)


def schouten(a: MultiVector, b: MultiVector) -> MultiVector:
    """[X_1..X_s, Y_1..Y_l]_S = sum (-1)^(i+j) [X_i,Y_j] ∧ X_1..^X_i..X_s ∧ Y_1..^Y_j..Y_l."""
    a._check(b)
    L = a.algebra
    out: dict[Blade, Fraction] = {}
    for ka, ca in a.terms.items():
        if not ka:
            continue
        for kb, cb in b.terms.items():
            if not kb:
                continue
            for k, c in _schouten_blades(L, ka, kb):
                out[k] = out.get(k, ZERO) + ca * cb * c
    return MultiVector(L, out)


def check_grade(L: LieAlgebra, m: int) -> None:
    if not 0 <= m <= L.dim:
        raise GradeOutOfRange(f"grade {m} outside 0..{L.dim}")


def lambda_power(T, m: int, mode: str = "derivation") -> EndoMap:
    """Λ^m T in the canonical basis of Λ^m (columns are images of basis m-vectors)."""
    M = T.matrix if isinstance(T, EndoMap) else T
    n = M.shape[0]
    if not 0 <= m <= n:
        raise GradeOutOfRange(f"grade {m} outside 0..{n}")
    bs = blades(n, m)
    idx = blade_index(n, m)
    out = zeros(len(bs), len(bs))
    if mode == "derivation":
        for col, J in enumerate(bs):
            for pos, j in enumerate(J):
                for k in range(n):
                    x = M[k, j]
                    if not x:
                        continue
                    s, K = sort_sign(J[:pos] + (k,) + J[pos + 1 :])
                    if s:
                        out[idx[K], col] += s * x
    elif mode == "multiplicative":
        for col, J in enumerate(bs):
            for row, I in enumerate(bs):
                out[row, col] = det(M[np.ix_(I, J)]) if m else Fraction(1)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return EndoMap(m, out)


@lru_cache(maxsize=None)
def ad_power(L: LieAlgebra, m: int) -> tuple[np.ndarray, ...]:
    """Matrices of v ↦ [e_i, v]_S on Λ^m, one per basis vector e_i."""
    check_grade(L, m)
    return tuple(lambda_power(a, m).matrix for a in L.ad_matrices)


def annihilator_span(w: MultiVector) -> tuple[Subspace, bool]:
    """({v in g : v ∧ w = 0}, decomposable flag)."""
    if w.is_zero():
        raise ZeroInput("annihilator of the zero multivector")
    if not w.is_homogeneous():
        raise MixedGrade(f"element has grades {sorted(w.grades())}")
    m = w.grade()
    if m == 0:
        raise GradeMismatch("annihilator needs grade >= 1")
    L = w.algebra
    n = L.dim
    cols = [wedge(MultiVector.basis(L, i), w).coords(m + 1) for i in range(n)]
    # rows of the (C(n,m+1) x n) system
    rows = [[cols[i][r] for i in range(n)] for r in range(binomial(n, m + 1))]
    span = Subspace.kernel(rows, n, "g")
    return span, span.dim == m


# text syntax

_NUM = r"(?:\d+(?:/\d+)?|\d*\.\d+)"
_TERM_RE = re.compile(rf"^\s*(?:\(?\s*({_NUM})\s*\)?\s*\*?\s*)?(.*?)\s*$")


def _common_prefix(basis: Sequence[str]) -> str:
    if not basis:
        return ""
    pre = basis[0]
    for b in basis[1:]:
        while not b.startswith(pre):
            pre = pre[:-1]
    # keep alphabetic prefixes only, and only when every suffix is nonempty
    pre = re.match(r"[^\W\d_]*", pre).group(0)
    return pre if pre and all(len(b) > len(pre) for b in basis) else ""


def _resolve(word: str, tokens: Sequence[str]) -> list[list[int]]:
    sols: list[list[int]] = []

    def go(rest: str, acc: list[int]):
        if len(sols) > 1:
            return
        if not rest:
            sols.append(list(acc))
            return
        for i, t in enumerate(tokens):
            if rest.startswith(t):
                go(rest[len(t) :], acc + [i])

    go(word, [])
    return sols


def _split_blade(name: str, basis: Sequence[str]) -> list[int]:
    """Split a blade into basis indices.

    Accepts concatenated names ("e1e2"), ^ or ∧ separated names, and the short form
    "e12" when all names share an alphabetic prefix.
    """
    parts = [p for p in re.split(r"\s*(?:\^|∧|\*)\s*", name) if p]
    pre = _common_prefix(basis)
    out: list[int] = []
    for part in parts:
        sols = _resolve(part, basis)
        if not sols and pre and part.startswith(pre):
            sols = _resolve(part[len(pre) :], [b[len(pre) :] for b in basis])
        if not sols:
            raise ParseError(f"cannot resolve {part!r} against basis {list(basis)}")
        if len(sols) > 1:
            raise ParseError(f"ambiguous blade {part!r}; separate factors with ^")
        out.extend(sols[0])
    return out


def parse_multivector(L: LieAlgebra, text: str) -> MultiVector:
    """Parse e.g. "3/2*e12 - e13 + e123" or "2*e1^e2 + 1" against L's basis names."""
    s = text.strip()
    if not s:
        raise ParseError("empty expression")
    pieces = re.findall(r"[+-]?[^+-]+", s.replace(" ", ""))
    if not pieces or "".join(pieces) != s.replace(" ", ""):
        raise ParseError(f"cannot parse {text!r}")
    terms: dict[Blade, Fraction] = {}
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        m = _TERM_RE.match(body)
        coef_s, blade_s = m.group(1), m.group(2)
        if coef_s is None and blade_s and re.fullmatch(_NUM, blade_s):
            coef_s, blade_s = blade_s, ""
        try:
            coef = Fraction(coef_s) if coef_s else Fraction(1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient in {piece!r}") from exc
        idx = _split_blade(blade_s, L.basis) if blade_s else []
        s_, key = sort_sign(idx)
        if not s_:
            continue
        terms[key] = terms.get(key, ZERO) + sign * s_ * coef
    return MultiVector(L, terms)


def multivector_from_json(L: LieAlgebra, doc: Mapping) -> MultiVector:
    terms = {}
    for key, c in doc.get("terms", {}).items():
        idx = tuple(int(x) - 1 for x in key.split(",") if x.strip()) if key else ()
        terms[idx] = frac(c)
    return MultiVector(L, terms)


def blade_label(L: LieAlgebra, key: Blade) -> str:
    if not key:
        return "1"
    pre = _common_prefix(L.basis)
    if pre and len(key) > 1:
        return pre + "".join(L.basis[i][len(pre) :] for i in key)
    return "".join(L.basis[i] for i in key)


def format_multivector(w: MultiVector) -> str:
    if w.is_zero():
        return "0"
    out = []
    for k, c in w.terms.items():
        lab = blade_label(w.algebra, k)
        mag = abs(c)
        if k and mag == 1:
            body = lab
        elif k:
            body = f"{frac_str(mag)}*{lab}"
        else:
            body = frac_str(mag)
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first = ("-" if out[0][0] == "-" else "") + out[0][1]
    return " ".join([first] + [f"{s} {b}" for s, b in out[1:]])
