"""
Floating-point replay of a construction with mpmath.

The exact trace is replayed with binary floats of a fixed precision and
every point is compared with its exact coordinates. Intersections follow
the resolved `idx` selectors of the trace, so the replay never has to
decide a sign on its own.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

import mpmath

from config import Config
from construction.elaborate import elaborate_with_workspace
from construction.executor import Workspace, execute
from construction.program import (
    CircleOnDiameter, Dist, Divide, DrawCircle, DrawLine, Expr,
    InitialPoint, Intersect, LengthDef, LengthProduct, LengthQuotient,
    LengthSqrt, Midpoint, Neg, Num, OnRay, PerpThrough, Program, Ref, Sqrt,
)
from field import Constructible, approx_interval
from utils.errors import InternalDefect

FloatPoint = Tuple[mpmath.mpf, mpmath.mpf]


def to_mpf(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def exact_to_mpf(value: Constructible, bits: int) -> mpmath.mpf:
    return to_mpf(approx_interval(value, bits + 16).lo)


@dataclass
class ReplayReport:
    bits: int
    points: int
    max_deviation: mpmath.mpf
    tolerance_bits: int

    @property
    def within_tolerance(self) -> bool:
        return self.max_deviation <= mpmath.ldexp(1, -self.tolerance_bits)

    def to_dict(self) -> dict:
        return {
            "type": "replay",
            "bits": self.bits,
            "points": self.points,
            "max_deviation": mpmath.nstr(self.max_deviation, 6),
            "tolerance_bits": self.tolerance_bits,
            "within_tolerance": self.within_tolerance,
        }


class FloatReplay:
    """Replays a resolved trace with mpmath floats at the current working precision."""

    def __init__(self):
        self.values: Dict[str, object] = {}

    def point(self, name: str) -> FloatPoint:
        return self.values[name]

    def dist(self, a: str, b: str) -> mpmath.mpf:
        (ax, ay), (bx, by) = self.point(a), self.point(b)
        return mpmath.sqrt((bx - ax) ** 2 + (by - ay) ** 2)

    def expr(self, e: Expr) -> mpmath.mpf:
        if isinstance(e, Num):
            return to_mpf(e.value)
        if isinstance(e, Dist):
            return self.dist(e.a, e.b)
        if isinstance(e, Ref):
            return self.values[e.name]
        if isinstance(e, Neg):
            return -self.expr(e.arg)
        if isinstance(e, Sqrt):
            return mpmath.sqrt(self.expr(e.arg))
        left, right = self.expr(e.left), self.expr(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        return left / right

    def intersect(self, a, b, index: int) -> FloatPoint:
        if a[0] == "circle" and b[0] == "line":
            a, b = b, a
        if a[0] == "line" and b[0] == "line":
            return self._line_line(a, b)
        if a[0] == "line":
            return self._line_circle(a, b, index)
        return self._circle_circle(a, b, index)

    @staticmethod
    def _line_line(a, b) -> FloatPoint:
        (_, (px, py), (dx, dy)), (_, (qx, qy), (ex, ey)) = a, b
        t = ((qx - px) * ey - (qy - py) * ex) / (dx * ey - dy * ex)
        return px + t * dx, py + t * dy

    @staticmethod
    def _line_circle(line, circle, index: int) -> FloatPoint:
        _, (px, py), (dx, dy) = line
        _, (cx, cy), r2 = circle
        fx, fy = px - cx, py - cy
        a = dx * dx + dy * dy
        b = 2 * (fx * dx + fy * dy)
        c = fx * fx + fy * fy - r2
        root = mpmath.sqrt(max(b * b - 4 * a * c, 0))
        t = (-b - root) / (2 * a) if index == 0 else (-b + root) / (2 * a)
        return px + t * dx, py + t * dy

    @staticmethod
    def _circle_circle(c1, c2, index: int) -> FloatPoint:
        _, (ax, ay), r1 = c1
        _, (bx, by), r2 = c2
        ex, ey = bx - ax, by - ay
        d2 = ex * ex + ey * ey
        k = (d2 + r1 - r2) / (2 * d2)
        m = mpmath.sqrt(max(r1 / d2 - k * k, 0))
        sign = 1 if index == 0 else -1
        return ax + k * ex - sign * m * ey, ay + k * ey + sign * m * ex

    def line(self, p: FloatPoint, q: FloatPoint):
        return "line", p, (q[0] - p[0], q[1] - p[1])

    def circle(self, center: FloatPoint, through: FloatPoint):
        return "circle", center, (through[0] - center[0]) ** 2 + (through[1] - center[1]) ** 2

    def run(self, step) -> None:
        v = self.values
        if isinstance(step, InitialPoint):
            v[step.name] = (to_mpf(step.x), to_mpf(step.y))
        elif isinstance(step, DrawLine):
            v[step.name] = self.line(self.point(step.p), self.point(step.q))
        elif isinstance(step, PerpThrough):
            (px, py), (_, _, (dx, dy)) = self.point(step.point), v[step.line]
            v[step.name] = "line", (px, py), (-dy, dx)
        elif isinstance(step, DrawCircle):
            v[step.name] = self.circle(self.point(step.center), self.point(step.through))
        elif isinstance(step, CircleOnDiameter):
            (px, py), q = self.point(step.p), self.point(step.q)
            v[step.name] = self.circle(((px + q[0]) / 2, (py + q[1]) / 2), q)
        elif isinstance(step, Intersect):
            v[step.name] = self.intersect(v[step.a], v[step.b], step.selector.index)
        elif isinstance(step, Midpoint):
            (px, py), (qx, qy) = self.point(step.p), self.point(step.q)
            v[step.name] = (px + qx) / 2, (py + qy) / 2
        elif isinstance(step, OnRay):
            (ox, oy), (tx, ty) = self.point(step.origin), self.point(step.toward)
            scale = self.expr(step.length) / mpmath.sqrt((tx - ox) ** 2 + (ty - oy) ** 2)
            v[step.name] = ox + scale * (tx - ox), oy + scale * (ty - oy)
        elif isinstance(step, Divide):
            (px, py), (qx, qy) = self.point(step.p), self.point(step.q)
            for i, name in enumerate(step.names, start=1):
                f = mpmath.mpf(i) / step.n
                v[name] = px + f * (qx - px), py + f * (qy - py)
        elif isinstance(step, LengthDef):
            v[step.name] = self.expr(step.expr)
        elif isinstance(step, LengthProduct):
            v[step.name] = v[step.a] * v[step.b]
        elif isinstance(step, LengthQuotient):
            v[step.name] = v[step.a] / v[step.b]
        elif isinstance(step, LengthSqrt):
            v[step.name] = mpmath.sqrt(v[step.a])
        else:
            raise InternalDefect(f"cannot replay {step!r}")


def max_deviation(w: Workspace, replay: FloatReplay, bits: int) -> mpmath.mpf:
    worst = mpmath.mpf(0)
    for name, point in w.points():
        fx, fy = replay.point(name)
        worst = max(worst,
                    abs(fx - exact_to_mpf(point.x, bits)),
                    abs(fy - exact_to_mpf(point.y, bits)))
    return worst


def float_replay(program: Program, bits: int = None, elaborated: bool = True) -> ReplayReport:
    """
    Replay a program's trace in floating point and measure the drift.

    Args:
        program: Surface program
        bits: mpmath working precision (default Config.REPLAY_BITS)
        elaborated: Replay the primitive expansion instead of the surface trace

    Returns:
        ReplayReport with the largest coordinate deviation over all points
    """
    bits = bits or Config.REPLAY_BITS
    if elaborated:
        _, w = elaborate_with_workspace(program)
    else:
        w = execute(program)
    replay = FloatReplay()
    with mpmath.workprec(bits):
        for step in w.trace:
            replay.run(step)
        worst = max_deviation(w, replay, bits)
    return ReplayReport(bits, sum(1 for _ in w.points()), worst, Config.REPLAY_TOLERANCE_BITS)
