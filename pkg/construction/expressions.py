"""
Length expressions: constant folding, evaluation and coefficient splitting.
"""

from fractions import Fraction
from typing import Mapping, Optional, Tuple

from construction.program import BinOp, Dist, Expr, Neg, Num, Ref, Sqrt
from field import Constructible, from_rational
from geometry import distance
from utils.errors import FieldError


def make_binop(op: str, left: Expr, right: Expr) -> Expr:
    """BinOp node, folded to a Num when both sides are literals."""
    if isinstance(left, Num) and isinstance(right, Num):
        a, b = left.value, right.value
        if op == "+":
            return Num(a + b)
        if op == "-":
            return Num(a - b)
        if op == "*":
            return Num(a * b)
        if b == 0:
            raise FieldError("division by zero")
        return Num(a / b)
    return BinOp(op, left, right)


def make_neg(arg: Expr) -> Expr:
    if isinstance(arg, Num):
        return Num(-arg.value)
    return Neg(arg)


def make_sqrt(arg: Expr) -> Expr:
    if isinstance(arg, Num) and arg.value >= 0:
        root = from_rational(arg.value).sqrt().as_rational()
        if root is not None:
            return Num(root)
    return Sqrt(arg)


def names_in(expr: Expr) -> Tuple[str, ...]:
    """Point and length names an expression refers to, in reading order."""
    if isinstance(expr, Dist):
        return (expr.a, expr.b)
    if isinstance(expr, Ref):
        return (expr.name,)
    if isinstance(expr, BinOp):
        return names_in(expr.left) + names_in(expr.right)
    if isinstance(expr, (Sqrt, Neg)):
        return names_in(expr.arg)
    return ()


def needs_unit(expr: Expr) -> bool:
    """
    Whether realizing the expression as a segment needs the unit segment.

    Rational multiples of existing segments can be built from the segments
    themselves; literals, sums, differences, square roots and products or
    quotients of two segments cannot.
    """
    if isinstance(expr, Num):
        return True
    if isinstance(expr, (Dist, Ref)):
        return False
    if isinstance(expr, Neg):
        return needs_unit(expr.arg)
    if isinstance(expr, BinOp):
        if expr.op in "+-":
            return True
        if isinstance(expr.right, Num):
            return needs_unit(expr.left)
        if isinstance(expr.left, Num) and expr.op == "*":
            return needs_unit(expr.right)
        return True
    return True


def evaluate(expr: Expr, bindings: Mapping[str, object]) -> Constructible:
    """
    Exact value of an expression.

    Args:
        expr: Expression tree
        bindings: Name lookup; points for dist(), lengths for references

    Returns:
        Constructible value
    """
    if isinstance(expr, Num):
        return from_rational(expr.value)
    if isinstance(expr, Dist):
        return distance(bindings[expr.a], bindings[expr.b])
    if isinstance(expr, Ref):
        return bindings[expr.name]
    if isinstance(expr, Neg):
        return -evaluate(expr.arg, bindings)
    if isinstance(expr, Sqrt):
        return evaluate(expr.arg, bindings).sqrt()
    left = evaluate(expr.left, bindings)
    right = evaluate(expr.right, bindings)
    if expr.op == "+":
        return left + right
    if expr.op == "-":
        return left - right
    if expr.op == "*":
        return left * right
    return left / right


def split_coefficient(expr: Expr) -> Tuple[Fraction, Optional[Expr]]:
    """
    Write expr as c * core with a rational c.

    Returns (c, None) for a pure rational.
    """
    if isinstance(expr, Num):
        return expr.value, None
    if isinstance(expr, Neg):
        c, core = split_coefficient(expr.arg)
        return -c, core
    if isinstance(expr, BinOp) and expr.op in "*/":
        c1, k1 = split_coefficient(expr.left)
        c2, k2 = split_coefficient(expr.right)
        if expr.op == "*":
            if k1 is None or k2 is None:
                return c1 * c2, k2 if k1 is None else k1
            return c1 * c2, BinOp("*", k1, k2)
        if c2 == 0:
            raise FieldError("division by zero")
        if k2 is None:
            return c1 / c2, k1
        return c1 / c2, BinOp("/", k1 if k1 is not None else Num(Fraction(1)), k2)
    return Fraction(1), expr
