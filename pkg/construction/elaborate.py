"""
Macro expansion into compass and ruler primitives.

The elaborator runs every primitive it emits, so it can pick the
expansion that fits the actual configuration (a point on or off a line,
an operand equal to the unit, zero lengths) and choose auxiliary
intersection points exactly. Auxiliary names are `__aux<k>`.

Length arithmetic happens in a scratch frame built on the unit segment
O U: the axis L1 = OU, the perpendicular l0 at O with V on it at
distance 1, and (when needed) the perpendicular l1 at U.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from construction.executor import Workspace, execute_step
from construction.expressions import split_coefficient
from construction.program import (
    BinOp, CircleOnDiameter, Dist, Divide, DrawCircle, DrawLine, Expr, Far,
    Index, InitialPoint, Intersect, LengthDef, LengthProduct, LengthQuotient,
    LengthSqrt, Midpoint, Neg, Num, OnRay, PerpThrough, Program, Ref,
    SameSide, Selector, Sqrt, Step,
)
from construction.selectors import index_of
from field import Constructible
from geometry import Line, Point, distance, intersect
from utils.errors import ExecutionError, InternalDefect

Segment = Tuple[str, str]


class Elaborator:
    def __init__(self, program: Program):
        self.program = program
        self.steps: List[Step] = []
        self.w = Workspace(program.name, program.unit)
        self.line_points: Dict[str, Segment] = {}
        self.segments: Dict[str, Segment] = {}
        self._counter = 0
        self._frame: Optional[Dict[str, str]] = None
        self._current = "?"

    # ------------------------------------------------------------------
    # Emission

    def fresh(self) -> str:
        name = f"__aux{self._counter}"
        self._counter += 1
        return name

    def emit(self, step: Step) -> str:
        execute_step(self.w, step)
        self.steps.append(step)
        if isinstance(step, DrawLine):
            self.line_points[step.name] = (step.p, step.q)
        return step.name

    def line(self, p: str, q: str, name: Optional[str] = None) -> str:
        return self.emit(DrawLine(name or self.fresh(), p, q))

    def circle(self, center: str, through: str, name: Optional[str] = None) -> str:
        return self.emit(DrawCircle(name or self.fresh(), center, through))

    def cut(self, a: str, b: str, selector: Optional[Selector] = None,
            name: Optional[str] = None) -> str:
        return self.emit(Intersect(name or self.fresh(), a, b, selector))

    def transfer(self, origin: str, toward: str, seg: Segment,
                 name: Optional[str] = None) -> str:
        return self.emit(OnRay(name or self.fresh(), origin, toward, Dist(*seg)))

    # ------------------------------------------------------------------
    # Exact queries on the running workspace

    def pt(self, name: str) -> Point:
        return self.w.point(name)

    def length(self, seg: Segment) -> Constructible:
        return distance(self.pt(seg[0]), self.pt(seg[1]))

    def is_zero(self, seg: Segment) -> bool:
        return seg[0] == seg[1] or self.pt(seg[0]) == self.pt(seg[1])

    def is_unit(self, seg: Segment) -> bool:
        return self.length(seg) == 1

    def find_line(self, p: str, q: str) -> Optional[str]:
        """An already drawn line through both points."""
        a, b = self.pt(p), self.pt(q)
        for name in self.line_points:
            line = self.w[name]
            if line.contains(a) and line.contains(b):
                return name
        return None

    def line_through(self, p: str, q: str) -> str:
        return self.find_line(p, q) or self.line(p, q)

    def other_point_on(self, line: str, avoid: str) -> str:
        p, q = self.line_points[line]
        return q if self.pt(p) == self.pt(avoid) else p

    def _fail(self, message: str):
        raise ExecutionError(self._current, message)

    # ------------------------------------------------------------------
    # Geometric macros

    def midpoint(self, p: str, q: str, name: Optional[str] = None) -> str:
        """Classical bisection: two circles, their common chord, and line PQ."""
        if self.pt(p) == self.pt(q):
            return self._coincident(p, name)
        c1 = self.circle(p, q)
        c2 = self.circle(q, p)
        x1 = self.cut(c1, c2, Index(0))
        x2 = self.cut(c1, c2, Index(1))
        chord = self.line(x1, x2)
        base = self.line_through(p, q)
        return self.cut(chord, base, None, name)

    def _coincident(self, p: str, name: Optional[str]) -> str:
        if name is None:
            return p
        for other, point in self.w.points():
            if point != self.pt(p):
                return self.transfer(p, other, (p, p), name)
        self._fail("cannot place a point without a second point")

    def perpendicular(self, x: str, base: str, marking: Optional[Segment] = None,
                      name: Optional[str] = None) -> str:
        """
        Line through x perpendicular to `base`, directed along the left normal.

        On the line: mark T and T' symmetric about x and draw their
        perpendicular bisector. Off the line: reflect x in the line with
        two circles.
        """
        line: Line = self.w[base]
        normal = line.direction.rot90()
        if line.contains(self.pt(x)):
            if marking is None:
                marking = self.program.unit or self.line_points[base]
            y = self.other_point_on(base, x)
            t = self.transfer(x, y, marking)
            around = self.circle(x, t)
            t2 = self.cut(base, around, Far(t))
            ca = self.circle(t, t2)
            cb = self.circle(t2, t)
            z1 = self.cut(ca, cb, Index(0))
            z2 = self.cut(ca, cb, Index(1))
        else:
            a, b = self.line_points[base]
            ca = self.circle(a, x)
            cb = self.circle(b, x)
            z1 = x
            z2 = self.cut(ca, cb, Far(x))
        if (self.pt(z2) - self.pt(z1)).dot(normal).sign() < 0:
            z1, z2 = z2, z1
        return self.line(z1, z2, name or self.fresh())

    def circle_on_diameter(self, p: str, q: str, name: str) -> str:
        center = self.midpoint(p, q)
        self.circle(center, q, name)
        self.w.diameters[name] = (p, q)
        return name

    def mark_along(self, line: str, start: str, behind: str, count: int) -> List[str]:
        """
        Compass marks beyond `start`, each |start - behind| further along the line.

        Returns the new points in order.
        """
        marks = []
        prev2, prev = behind, start
        for _ in range(count):
            around = self.circle(prev, prev2)
            mark = self.cut(line, around, Far(prev2))
            marks.append(mark)
            prev2, prev = prev, mark
        return marks

    def divide(self, p: str, q: str, n: int, wanted: Iterable[int],
               names: Optional[Dict[int, str]] = None) -> Dict[int, str]:
        """
        Points at fractions k/n of PQ by the intercept theorem.

        Equal marks go up the perpendicular at P and down the perpendicular
        at Q; the line joining mark k above P to mark n-k below Q crosses PQ
        at fraction k/n.
        """
        names = names or {}
        wanted = sorted(set(wanted))
        base = self.line_through(p, q)
        seg = (p, q)
        unit = self.program.unit
        if unit is not None and self.length(unit) <= self.length(seg):
            seg = unit
        lp = self.perpendicular(p, base, seg)
        lq = self.perpendicular(q, base, seg)
        up = [p, self.transfer(p, self.line_points[lp][1], seg)]
        down = [q, self.transfer(q, self.line_points[lq][0], seg)]
        up += self.mark_along(lp, up[1], p, max(wanted) - 1)
        down += self.mark_along(lq, down[1], q, n - min(wanted) - 1)
        out = {}
        for k in wanted:
            joining = self.line(up[k], down[n - k])
            out[k] = self.cut(joining, base, None, names.get(k))
        return out

    # ------------------------------------------------------------------
    # Scratch frame

    def frame(self) -> Dict[str, str]:
        if self._frame is None:
            if self.program.unit is None:
                self._fail("missing unit")
            o, u = self.program.unit
            axis = self.line_through(o, u)
            vertical = self.perpendicular(o, axis, (o, u))
            around = self.circle(o, u)
            v = self.cut(vertical, around, Index(1))
            self._frame = {"O": o, "U": u, "L1": axis, "l0": vertical, "V": v}
        return self._frame

    def frame_l1(self) -> str:
        f = self.frame()
        if "l1" not in f:
            f["l1"] = self.perpendicular(f["U"], f["L1"], (f["O"], f["U"]))
        return f["l1"]

    def _lay(self, seg: Segment, line: str, toward: str) -> str:
        o = self.frame()["O"]
        if self.is_zero(seg):
            return o
        ray = self.pt(toward) - self.pt(o)
        for start, end in (seg, seg[::-1]):
            if self.pt(start) == self.pt(o) and self.w[line].contains(self.pt(end)) \
                    and (self.pt(end) - self.pt(o)).dot(ray).sign() > 0:
                return end
        return self.transfer(o, toward, seg)

    def lay_on_axis(self, seg: Segment) -> str:
        f = self.frame()
        return self._lay(seg, f["L1"], f["U"])

    def lay_on_vertical(self, seg: Segment) -> str:
        f = self.frame()
        return self._lay(seg, f["l0"], f["V"])

    # ------------------------------------------------------------------
    # Length arithmetic on segments

    def unit_segment(self) -> Segment:
        if self.program.unit is None:
            self._fail("missing unit")
        return self.program.unit

    def zero_segment(self) -> Segment:
        o = self.unit_segment()[0]
        return (o, o)

    def scaled(self, seg: Segment, c: Fraction) -> Segment:
        if c < 0:
            self._fail("negative length")
        if c == 0 or self.is_zero(seg):
            return (seg[0], seg[0])
        if c == 1:
            return seg
        a, b = seg
        p, q = c.numerator, c.denominator
        if q == 1:
            marks = self.mark_along(self.line_through(a, b), b, a, p - 1)
            return (a, marks[-1])
        if p < q:
            return (a, self.divide(a, b, q, [p])[p])
        behind = self.divide(a, b, q, [q - 1])[q - 1]
        marks = self.mark_along(self.line_through(a, b), b, behind, p - q)
        return (a, marks[-1])

    def add(self, x: Segment, y: Segment) -> Segment:
        if self.is_zero(x):
            return y
        if self.is_zero(y):
            return x
        f = self.frame()
        end = self.lay_on_axis(x)
        back = self.transfer(end, f["O"], y)
        around = self.circle(end, back)
        return (f["O"], self.cut(f["L1"], around, Far(back)))

    def subtract(self, x: Segment, y: Segment) -> Segment:
        s = (self.length(x) - self.length(y)).sign()
        if s < 0:
            self._fail("negative length")
        if s == 0:
            return self.zero_segment()
        if self.is_zero(y):
            return x
        return (self.lay_on_axis(y), self.lay_on_axis(x))

    def parallelogram(self, a: str, b: str, c: str) -> str:
        """The fourth vertex W = B + C - A, from two compass transfers."""
        o = self.frame()["O"]
        p1 = self.transfer(c, o, (a, b))
        c1 = self.circle(c, p1)
        p2 = self.transfer(b, o, (a, c))
        c2 = self.circle(b, p2)
        expected = self.pt(b) + self.pt(c) - self.pt(a)
        candidates = intersect(self.w[c1], self.w[c2])
        return self.cut(c1, c2, Index(index_of(candidates, expected)))

    def multiply(self, x: Segment, y: Segment) -> Segment:
        if self.is_zero(x) or self.is_zero(y):
            return self.zero_segment()
        if self.is_unit(y):
            return x
        if self.is_unit(x):
            return y
        f = self.frame()
        on_axis = self.lay_on_axis(x)
        on_vertical = self.lay_on_vertical(y)
        w = self.parallelogram(f["U"], on_vertical, on_axis)
        joining = self.line(on_axis, w)
        return (f["O"], self.cut(joining, f["l0"]))

    def divide_lengths(self, x: Segment, y: Segment) -> Segment:
        if self.is_zero(y):
            self._fail("division by zero")
        if self.is_zero(x):
            return self.zero_segment()
        if self.is_unit(y):
            return x
        f = self.frame()
        on_axis = self.lay_on_axis(y)
        on_vertical = self.lay_on_vertical(x)
        w = self.parallelogram(on_axis, on_vertical, f["U"])
        joining = self.line(f["U"], w)
        return (f["O"], self.cut(joining, f["l0"]))

    def square_root(self, x: Segment) -> Segment:
        """Altitude at U of the semicircle on O..(U + x)."""
        if self.is_zero(x):
            return self.zero_segment()
        f = self.frame()
        if self.is_unit(x):
            return (f["O"], f["U"])
        back = self.transfer(f["U"], f["O"], x)
        around = self.circle(f["U"], back)
        end = self.cut(f["L1"], around, Far(back))
        center = self.midpoint(f["O"], end)
        semicircle = self.circle(center, end)
        top = self.cut(self.frame_l1(), semicircle, SameSide(f["L1"], f["V"]))
        return (f["U"], top)

    def realize(self, expr: Expr) -> Segment:
        """A segment whose length is the expression's value."""
        c, core = split_coefficient(expr)
        if core is None:
            return self.scaled(self.unit_segment(), c)
        return self.scaled(self._realize_core(core), c)

    def _realize_core(self, expr: Expr) -> Segment:
        if isinstance(expr, Dist):
            return (expr.a, expr.b)
        if isinstance(expr, Ref):
            return self.segments[expr.name]
        if isinstance(expr, Sqrt):
            return self.square_root(self.realize(expr.arg))
        if isinstance(expr, (Neg, Num)):
            self._fail("negative length")
        if isinstance(expr, BinOp):
            left = self.realize(expr.left)
            right = self.realize(expr.right)
            if expr.op == "+":
                return self.add(left, right)
            if expr.op == "-":
                return self.subtract(left, right)
            if expr.op == "*":
                return self.multiply(left, right)
            return self.divide_lengths(left, right)
        raise InternalDefect(f"unknown expression {expr!r}")

    # ------------------------------------------------------------------
    # Surface steps

    def define_length(self, name: str, seg: Segment) -> None:
        self.segments[name] = seg
        self.emit(LengthDef(name, Dist(*seg)))

    def step(self, step: Step) -> None:
        self._current = ",".join(step.names) if isinstance(step, Divide) else step.name
        if isinstance(step, (InitialPoint, DrawLine, DrawCircle, Intersect)):
            self.emit(step)
        elif isinstance(step, PerpThrough):
            self.perpendicular(step.point, step.line, name=step.name)
        elif isinstance(step, CircleOnDiameter):
            self.circle_on_diameter(step.p, step.q, step.name)
        elif isinstance(step, Midpoint):
            self.midpoint(step.p, step.q, step.name)
        elif isinstance(step, OnRay):
            seg = step.length if isinstance(step.length, Dist) else Dist(*self.realize(step.length))
            self.emit(OnRay(step.name, step.origin, step.toward, seg))
        elif isinstance(step, Divide):
            if self.pt(step.p) == self.pt(step.q):
                for name in step.names:
                    self._coincident(step.p, name)
            else:
                targets = {k: name for k, name in enumerate(step.names, start=1)}
                self.divide(step.p, step.q, step.n, targets, targets)
        elif isinstance(step, LengthDef):
            if isinstance(step.expr, Dist):
                self.define_length(step.name, (step.expr.a, step.expr.b))
            else:
                self.define_length(step.name, self.realize(step.expr))
        elif isinstance(step, LengthProduct):
            self.define_length(step.name, self.multiply(self.segments[step.a], self.segments[step.b]))
        elif isinstance(step, LengthQuotient):
            self.define_length(step.name,
                               self.divide_lengths(self.segments[step.a], self.segments[step.b]))
        elif isinstance(step, LengthSqrt):
            self.define_length(step.name, self.square_root(self.segments[step.a]))
        else:
            raise InternalDefect(f"unknown step {step!r}")

    def run(self) -> Tuple[Program, Workspace]:
        for step in self.program.steps:
            self.step(step)
        return Program(self.program.name, tuple(self.steps), self.program.unit), self.w


def elaborate(program: Program) -> Program:
    """Primitive-only program binding the same user names to the same values."""
    return Elaborator(program).run()[0]


def elaborate_with_workspace(program: Program) -> Tuple[Program, Workspace]:
    return Elaborator(program).run()
