"""
Construction program model: length expressions, selectors and steps.

Every node is a frozen dataclass so two programs compare structurally;
source locations ride along but never take part in equality.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

Location = Optional[Tuple[int, int]]


# ----------------------------------------------------------------------
# Length expressions


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Dist:
    a: str
    b: str


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sqrt:
    arg: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


Expr = Union[Num, Dist, Ref, BinOp, Sqrt, Neg]


# ----------------------------------------------------------------------
# Selectors


@dataclass(frozen=True)
class Near:
    point: str


@dataclass(frozen=True)
class Far:
    point: str


@dataclass(frozen=True)
class SameSide:
    line: str
    point: str


@dataclass(frozen=True)
class OppositeSide:
    line: str
    point: str


@dataclass(frozen=True)
class Index:
    index: int


Selector = Union[Near, Far, SameSide, OppositeSide, Index]


# ----------------------------------------------------------------------
# Steps


@dataclass(frozen=True)
class InitialPoint:
    name: str
    x: Fraction
    y: Fraction
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class DrawLine:
    name: str
    p: str
    q: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class PerpThrough:
    name: str
    point: str
    line: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class DrawCircle:
    name: str
    center: str
    through: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class CircleOnDiameter:
    name: str
    p: str
    q: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class Intersect:
    name: str
    a: str
    b: str
    selector: Optional[Selector] = None
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class Midpoint:
    name: str
    p: str
    q: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class OnRay:
    name: str
    origin: str
    toward: str
    length: Expr
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class Divide:
    names: Tuple[str, ...]
    p: str
    q: str
    n: int
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class LengthDef:
    name: str
    expr: Expr
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class LengthProduct:
    name: str
    a: str
    b: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class LengthQuotient:
    name: str
    a: str
    b: str
    location: Location = field(default=None, compare=False)


@dataclass(frozen=True)
class LengthSqrt:
    name: str
    a: str
    location: Location = field(default=None, compare=False)


Step = Union[
    InitialPoint, DrawLine, PerpThrough, DrawCircle, CircleOnDiameter,
    Intersect, Midpoint, OnRay, Divide, LengthDef,
    LengthProduct, LengthQuotient, LengthSqrt,
]

MACRO_STEPS = (PerpThrough, CircleOnDiameter, Midpoint, Divide,
               LengthProduct, LengthQuotient, LengthSqrt)
LENGTH_STEPS = (LengthDef, LengthProduct, LengthQuotient, LengthSqrt)


def defined_names(step: Step) -> Tuple[str, ...]:
    if isinstance(step, Divide):
        return step.names
    return (step.name,)


def is_macro(step: Step) -> bool:
    return isinstance(step, MACRO_STEPS)


def is_alias(step: Step) -> bool:
    """A LengthDef that only measures a distance between two points."""
    return isinstance(step, LengthDef) and isinstance(step.expr, Dist)


def is_primitive(step: Step) -> bool:
    """True for the compass/ruler steps an elaborated program may contain."""
    if isinstance(step, (InitialPoint, DrawLine, DrawCircle, Intersect)):
        return True
    return isinstance(step, OnRay) and isinstance(step.length, Dist)


@dataclass(frozen=True)
class Program:
    name: str
    steps: Tuple[Step, ...] = ()
    unit: Optional[Tuple[str, str]] = None

    def __len__(self) -> int:
        return len(self.steps)

    def names(self) -> Tuple[str, ...]:
        out = []
        for step in self.steps:
            out.extend(defined_names(step))
        return tuple(out)

    def construction_steps(self) -> int:
        """Steps that draw or mark something, i.e. all but length bookkeeping."""
        return sum(1 for step in self.steps if not isinstance(step, LENGTH_STEPS))
