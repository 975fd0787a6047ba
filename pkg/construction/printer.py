"""
Pretty printer: Program -> .construct text that parses back to the same Program.
"""

from fractions import Fraction
from typing import List

from construction.program import (
    BinOp, CircleOnDiameter, Dist, Divide, DrawCircle, DrawLine, Expr, Far,
    Index, InitialPoint, Intersect, LengthDef, LengthProduct, LengthQuotient,
    LengthSqrt, Midpoint, Near, Neg, Num, OnRay, OppositeSide, PerpThrough,
    Program, Ref, SameSide, Selector, Sqrt, Step, defined_names,
)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_expr(expr: Expr) -> str:
    """Fully parenthesized except at the top level of an operand."""
    if isinstance(expr, Num):
        if expr.value.denominator == 1 and expr.value >= 0:
            return str(expr.value.numerator)
        if expr.value < 0:
            return f"(0 - {format_rational(-expr.value)})"
        return f"({format_rational(expr.value)})"
    if isinstance(expr, Dist):
        return f"dist({expr.a},{expr.b})"
    if isinstance(expr, Ref):
        return expr.name
    if isinstance(expr, Sqrt):
        return f"sqrt({format_expr(expr.arg)})"
    if isinstance(expr, Neg):
        return f"-({format_expr(expr.arg)})"
    return f"{_operand(expr.left)} {expr.op} {_operand(expr.right)}"


def _operand(expr: Expr) -> str:
    text = format_expr(expr)
    return f"({text})" if isinstance(expr, BinOp) else text


def format_selector(selector: Selector) -> str:
    if isinstance(selector, Near):
        return f"near {selector.point}"
    if isinstance(selector, Far):
        return f"far {selector.point}"
    if isinstance(selector, SameSide):
        return f"side {selector.point} of {selector.line}"
    if isinstance(selector, OppositeSide):
        return f"opposite {selector.point} of {selector.line}"
    return f"idx {selector.index}"


def format_step(step: Step) -> str:
    if isinstance(step, InitialPoint):
        return f"point {step.name} = ({format_rational(step.x)}, {format_rational(step.y)})"
    if isinstance(step, DrawLine):
        return f"line {step.name} = through {step.p} {step.q}"
    if isinstance(step, PerpThrough):
        return f"line {step.name} = perp {step.point} to {step.line}"
    if isinstance(step, DrawCircle):
        return f"circle {step.name} = center {step.center} through {step.through}"
    if isinstance(step, CircleOnDiameter):
        return f"circle {step.name} = diameter {step.p} {step.q}"
    if isinstance(step, Intersect):
        text = f"point {step.name} = intersect {step.a} {step.b}"
        if step.selector is not None:
            text += f" {format_selector(step.selector)}"
        return text
    if isinstance(step, Midpoint):
        return f"point {step.name} = midpoint {step.p} {step.q}"
    if isinstance(step, OnRay):
        return f"point {step.name} = onray {step.origin} {step.toward} dist {format_expr(step.length)}"
    if isinstance(step, Divide):
        return f"points {' '.join(step.names)} = divide {step.p} {step.q} {step.n}"
    if isinstance(step, LengthProduct):
        return f"len {step.name} = {step.a} * {step.b}"
    if isinstance(step, LengthQuotient):
        return f"len {step.name} = {step.a} / {step.b}"
    if isinstance(step, LengthSqrt):
        return f"len {step.name} = sqrt({step.a})"
    if isinstance(step, LengthDef):
        return f"len {step.name} = {format_expr(step.expr)}"
    raise TypeError(f"unknown step {step!r}")


def format_program(program: Program) -> str:
    """
    DSL text for a program.

    The unit declaration is emitted right after both of its points exist.
    """
    lines: List[str] = [f"# {program.name}"]
    pending = set(program.unit) if program.unit else set()
    for step in program.steps:
        lines.append(format_step(step))
        if pending:
            pending.difference_update(defined_names(step))
            if not pending:
                lines.append(f"unit {program.unit[0]} {program.unit[1]}")
    return "\n".join(lines) + "\n"
