"""
Program execution: runs steps against the exact kernel and records a trace.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from construction.expressions import evaluate
from construction.program import (
    CircleOnDiameter, Divide, DrawCircle, DrawLine, Index, InitialPoint,
    Intersect, LengthDef, LengthProduct, LengthQuotient, LengthSqrt, Midpoint,
    OnRay, PerpThrough, Program, Step, defined_names,
)
from construction.selectors import index_of, resolve_selector
from field import Constructible
from geometry import (
    Circle, Line, Point, circle_center_through, distance, intersect,
    line_through, midpoint, point_on_ray,
)
from utils.errors import ExecutionError, FieldError, GeometryError, InternalDefect
from utils.logger import log_step


def step_label(step: Step) -> str:
    return ",".join(defined_names(step))


@dataclass
class Workspace:
    """Named bindings produced by a program, plus the executed trace."""
    name: str
    unit: Optional[Tuple[str, str]] = None
    bindings: Dict[str, object] = field(default_factory=dict)
    trace: List[Step] = field(default_factory=list)
    diameters: Dict[str, Tuple[str, str]] = field(default_factory=dict)

    def __contains__(self, name: str) -> bool:
        return name in self.bindings

    def __getitem__(self, name: str):
        try:
            return self.bindings[name]
        except KeyError:
            raise ExecutionError(name, "unknown name") from None

    def bind(self, name: str, value: object) -> None:
        if name in self.bindings:
            raise InternalDefect(f"name {name!r} bound twice")
        self.bindings[name] = value

    def point(self, name: str) -> Point:
        value = self[name]
        if not isinstance(value, Point):
            raise ExecutionError(name, "not a point")
        return value

    def points(self) -> Iterator[Tuple[str, Point]]:
        return ((n, v) for n, v in self.bindings.items() if isinstance(v, Point))

    def objects(self) -> Iterator[Tuple[str, object]]:
        return ((n, v) for n, v in self.bindings.items() if isinstance(v, (Line, Circle)))

    def lengths(self) -> Iterator[Tuple[str, Constructible]]:
        return ((n, v) for n, v in self.bindings.items() if isinstance(v, Constructible))

    def unit_length(self) -> Optional[Constructible]:
        if self.unit is None or not all(n in self.bindings for n in self.unit):
            return None
        return distance(self.point(self.unit[0]), self.point(self.unit[1]))

    def trace_program(self) -> Program:
        """The trace as a program; replaying it reproduces every binding."""
        return Program(f"{self.name}-trace", tuple(self.trace), self.unit)


def _run(w: Workspace, step: Step) -> Step:
    """Bind the step's names; returns the step as it goes into the trace."""
    if isinstance(step, InitialPoint):
        w.bind(step.name, Point.of(step.x, step.y))
    elif isinstance(step, DrawLine):
        w.bind(step.name, line_through(w.point(step.p), w.point(step.q)))
    elif isinstance(step, PerpThrough):
        p = w.point(step.point)
        m = w[step.line]
        w.bind(step.name, Line(p, p + m.direction.rot90()))
    elif isinstance(step, DrawCircle):
        w.bind(step.name, circle_center_through(w.point(step.center), w.point(step.through)))
    elif isinstance(step, CircleOnDiameter):
        p, q = w.point(step.p), w.point(step.q)
        w.bind(step.name, circle_center_through(midpoint(p, q), q))
        w.diameters[step.name] = (step.p, step.q)
    elif isinstance(step, Intersect):
        candidates = intersect(w[step.a], w[step.b])
        chosen = resolve_selector(candidates, step.selector, w.bindings, step.name)
        w.bind(step.name, chosen)
        return replace(step, selector=Index(index_of(candidates, chosen)))
    elif isinstance(step, Midpoint):
        w.bind(step.name, midpoint(w.point(step.p), w.point(step.q)))
    elif isinstance(step, OnRay):
        length = evaluate(step.length, w.bindings)
        w.bind(step.name, point_on_ray(w.point(step.origin), w.point(step.toward), length))
    elif isinstance(step, Divide):
        p, q = w.point(step.p), w.point(step.q)
        for i, name in enumerate(step.names, start=1):
            w.bind(name, p + (q - p).scaled(Fraction(i, step.n)))
    elif isinstance(step, LengthProduct):
        w.bind(step.name, w[step.a] * w[step.b])
    elif isinstance(step, LengthQuotient):
        w.bind(step.name, w[step.a] / w[step.b])
    elif isinstance(step, LengthSqrt):
        w.bind(step.name, w[step.a].sqrt())
    elif isinstance(step, LengthDef):
        w.bind(step.name, evaluate(step.expr, w.bindings))
    else:
        raise InternalDefect(f"unknown step {step!r}")
    return step


def execute_step(w: Workspace, step: Step) -> None:
    """
    Execute one step in place, appending it to the trace.

    Raises:
        ExecutionError: selector failures, degeneracies and division by zero,
            naming the step
    """
    label = step_label(step)
    try:
        traced = _run(w, step)
    except (GeometryError, FieldError) as e:
        raise ExecutionError(label, str(e)) from e
    w.trace.append(traced)
    log_step(w.name, label, type(step).__name__)
    if w.unit is not None and set(w.unit) & set(defined_names(step)):
        unit = w.unit_length()
        if unit is not None and unit != 1:
            raise ExecutionError(label, "the unit segment must have length 1")


def execute(program: Program) -> Workspace:
    """Run every step of a program and return its workspace."""
    w = Workspace(program.name, program.unit)
    for step in program.steps:
        execute_step(w, step)
    return w
