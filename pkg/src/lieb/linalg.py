"""Exact linear algebra over the rationals.

Rows are reduced incrementally as sparse dicts, which keeps the large but
very sparse invariance systems cheap. Dense matrices are numpy object arrays
of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    if isinstance(x, (np.integer,)):
        return Fraction(int(x))
    raise InputError(f"not an exact rational: {x!r}")


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def as_matrix(rows) -> np.ndarray:
    rows = [list(r) for r in rows]
    if not rows:
        return zeros(0, 0)
    out = zeros(len(rows), len(rows[0]))
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = frac(x)
    return out


def is_zero_array(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Each stored row has a 1 at its pivot and zeros at every other pivot.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = {}

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = dict(row)
        for p in [c for c in row if c in self.rows]:
            c = row.get(p)
            if not c:
                continue
            for j, x in self.rows[p].items():
                y = row.get(j, ZERO) - c * x
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
        return row

    def add(self, row) -> bool:
        """Insert a row (dict or dense sequence); return True if the rank grew."""
        if not isinstance(row, dict):
            row = {j: frac(x) for j, x in enumerate(row) if x}
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        c = row[p]
        row = {j: x / c for j, x in row.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for j, x in row.items():
                    y = other.get(j, ZERO) - f * x
                    if y:
                        other[j] = y
                    else:
                        other.pop(j, None)
        self.rows[p] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows))

    def dense_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for p in sorted(self.rows):
            r = [ZERO] * self.ncols
            for j, x in self.rows[p].items():
                r[j] = x
            out.append(tuple(r))
        return tuple(out)

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of {x : row . x = 0 for every stored row}."""
        free = [j for j in range(self.ncols) if j not in self.rows]
        basis = []
        for f in free:
            x = [ZERO] * self.ncols
            x[f] = ONE
            for p, row in self.rows.items():
                v = row.get(f)
                if v:
                    x[p] = -v
            basis.append(x)
        return basis


def rref(rows: Iterable, ncols: int) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.dense_rows(), e.pivots()


def rank(rows: Iterable, ncols: int) -> int:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable, ncols: int) -> list[list[Fraction]]:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.nullspace()


def matrix_rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return rank(m.tolist(), m.shape[1])


def det(m) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [[frac(x) for x in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    d = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        d *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f / p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return d * sign


def solve_in_span(basis_rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]):
    """Coefficients c with sum c_i basis_i = v, or None. Basis need not be echelon."""
    k = len(basis_rows)
    n = len(v)
    # unknowns c_0..c_{k-1}, augmented column k
    e = Echelon(k + 1)
    for j in range(n):
        row = {i: frac(basis_rows[i][j]) for i in range(k) if basis_rows[i][j]}
        if v[j]:
            row[k] = -frac(v[j])
        if row:
            e.add(row)
    if k in e.rows:
        return None
    # particular solution: free variables zero, c_p = -row[k]
    c = [ZERO] * k
    for p, row in e.rows.items():
        c[p] = -row.get(k, ZERO)
    return c


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient held in canonical reduced row-echelon form."""

    ambient: int
    rows: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]
    kind: str = field(default="", compare=False)

    @classmethod
    def span(cls, vectors: Iterable, ambient: int, kind: str = "") -> Subspace:
        e = Echelon(ambient)
        for v in vectors:
            v = list(v)
            if len(v) != ambient:
                raise InputError(f"vector of length {len(v)} in ambient dimension {ambient}")
            e.add(v)
        return cls(ambient, e.dense_rows(), e.pivots(), kind)

    @classmethod
    def zero(cls, ambient: int, kind: str = "") -> Subspace:
        return cls(ambient, (), (), kind)

    @classmethod
    def full(cls, ambient: int, kind: str = "") -> Subspace:
        return cls.span(np.eye(ambient, dtype=int).tolist(), ambient, kind)

    @classmethod
    def kernel(cls, rows: Iterable, ambient: int, kind: str = "") -> Subspace:
        return cls.span(nullspace(rows, ambient), ambient, kind)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[tuple[Fraction, ...]]:
        return list(self.rows)

    def _echelon(self) -> Echelon:
        e = Echelon(self.ambient)
        for p, r in zip(self.pivots, self.rows):
            e.rows[p] = {j: x for j, x in enumerate(r) if x}
        return e

    def residue(self, v) -> dict[int, Fraction]:
        row = {j: frac(x) for j, x in enumerate(v) if x}
        return self._echelon().reduce(row)

    def contains(self, v) -> bool:
        if len(v) != self.ambient:
            raise InputError("vector length does not match ambient dimension")
        return not self.residue(v)

    def coordinates(self, v) -> tuple[Fraction, ...] | None:
        """Coordinates in the echelon basis (read off at pivots), or None if v is outside."""
        if not self.contains(v):
            return None
        return tuple(frac(v[p]) for p in self.pivots)

    def issubspace(self, other: Subspace) -> bool:
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other: Subspace) -> bool:
        return self.issubspace(other)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient, self.kind)

    def intersect(self, other: Subspace) -> Subspace:
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.kind)
        # linear functionals cutting out `other`
        constraints = nullspace(other.rows, self.ambient)
        k = self.dim
        eqs = []
        for c in constraints:
            eqs.append([sum((c[j] * self.rows[i][j] for j in range(self.ambient)), ZERO) for i in range(k)])
        coeffs = nullspace(eqs, k)
        vecs = [[sum((a[i] * self.rows[i][j] for i in range(k)), ZERO) for j in range(self.ambient)] for a in coeffs]
        return Subspace.span(vecs, self.ambient, self.kind)

    def complement_indices(self) -> tuple[int, ...]:
        """Non-pivot coordinates; the matching unit vectors span a complement."""
        ps = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in ps)

    def annihilator(self) -> Subspace:
        return Subspace.span(nullspace(self.rows, self.ambient), self.ambient)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient
