"""Safe evaluation of the small expression language used by catalog data.

Scalars are exact rationals. Names resolve to parameters first, then to basis
blades of an optional algebra, so "2*alpha*e12 + e3" evaluates to a
MultiVector. As in Python, ^ binds looser than + and -, so wedge terms inside
a sum need parentheses: "2*alpha*e12 - (e1^e3)". Comparisons and and/or/not
are allowed for fixture guards.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from typing import Mapping

from ..algebra import LieAlgebra
from ..errors import ParseError
from ..exterior import MultiVector, _split_blade, sort_sign, wedge
from ..linalg import frac

_CMP = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}


def _blade(L: LieAlgebra, name: str) -> MultiVector:
    idx = _split_blade(name, L.basis)
    s, key = sort_sign(idx)
    return MultiVector(L, {key: s} if s else {})


def _mul(a, b):
    if isinstance(a, MultiVector) and isinstance(b, MultiVector):
        raise ParseError("multivectors multiply with ^ (wedge), not *")
    if isinstance(a, MultiVector):
        return a * b
    if isinstance(b, MultiVector):
        return b * a
    return a * b


def _add(a, b, sign=1):
    if isinstance(a, MultiVector) != isinstance(b, MultiVector):
        L = a.algebra if isinstance(a, MultiVector) else b.algebra
        a = a if isinstance(a, MultiVector) else MultiVector.scalar(L, a)
        b = b if isinstance(b, MultiVector) else MultiVector.scalar(L, b)
    return a + b if sign > 0 else a - b


def evaluate(text: str, env: Mapping | None = None, algebra: LieAlgebra | None = None):
    """Evaluate an expression to a Fraction, a bool or a MultiVector."""
    env = {k: frac(v) for k, v in (env or {}).items()}
    try:
        tree = ast.parse(str(text).strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id in env:
                return env[node.id]
            if algebra is not None:
                return _blade(algebra, node.id)
            raise ParseError(f"unknown name {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
            if isinstance(node.op, ast.Not):
                return not v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            op = node.op
            if isinstance(op, ast.Add):
                return _add(a, b)
            if isinstance(op, ast.Sub):
                return _add(a, b, -1)
            if isinstance(op, ast.Mult):
                return _mul(a, b)
            if isinstance(op, ast.Div) and isinstance(b, Fraction):
                if not b:
                    raise ParseError(f"division by zero in {text!r}")
                return a * (1 / b)
            if isinstance(op, ast.Pow) and isinstance(a, Fraction) and isinstance(b, Fraction) and b.denominator == 1:
                return a ** int(b)
            if isinstance(op, ast.BitXor) and isinstance(a, MultiVector) and isinstance(b, MultiVector):
                return wedge(a, b)
        if isinstance(node, ast.Compare):
            left = ev(node.left)
            for op, right in zip(node.ops, node.comparators):
                r = ev(right)
                if type(op) not in _CMP or not _CMP[type(op)](left, r):
                    return False
                left = r
            return True
        if isinstance(node, ast.BoolOp):
            vals = [ev(v) for v in node.values]
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        raise ParseError(f"unsupported syntax in {text!r}")

    return ev(tree)


def scalar(text, env: Mapping | None = None) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return frac(text)
    v = evaluate(text, env)
    if not isinstance(v, Fraction):
        raise ParseError(f"{text!r} is not a scalar expression")
    return v


def multivector(L: LieAlgebra, text: str, env: Mapping | None = None) -> MultiVector:
    v = evaluate(text, env, L)
    return v if isinstance(v, MultiVector) else MultiVector.scalar(L, v)
