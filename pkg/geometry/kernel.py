"""
Points, lines and circles over constructible coordinates.

Intersections are exact and ordered deterministically:
- line/line and line/circle results by increasing parameter t along the
  line's direction p0 -> p1 (a circle/line call is normalized so the
  line comes first);
- circle/circle results with the point left of the oriented axis
  center1 -> center2 first.
Tangency yields a single point.
"""

from dataclasses import dataclass
from typing import List, Union

from field import Constructible, from_rational
from utils.errors import GeometryError


@dataclass(frozen=True, eq=False)
class Point:
    x: Constructible
    y: Constructible

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Constructible.coerce(x), Constructible.coerce(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def rot90(self) -> "Point":
        """Counterclockwise quarter turn of a direction vector."""
        return Point(-self.y, self.x)

    def dot(self, other: "Point") -> Constructible:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Constructible:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> Constructible:
        return self.dot(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    __hash__ = None

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, eq=False)
class Line:
    """Unbounded line through p0 and p1, directed p0 -> p1."""
    p0: Point
    p1: Point

    @property
    def direction(self) -> Point:
        return self.p1 - self.p0

    def at(self, t: Constructible) -> Point:
        return self.p0 + self.direction.scaled(t)

    def side(self, p: Point) -> int:
        """+1 left of the directed line, -1 right, 0 on it."""
        return self.direction.cross(p - self.p0).sign()

    def contains(self, p: Point) -> bool:
        return self.side(p) == 0

    def same_as(self, other: "Line") -> bool:
        return other.contains(self.p0) and other.contains(self.p1)

    def __str__(self) -> str:
        return f"line {self.p0} -> {self.p1}"


@dataclass(frozen=True, eq=False)
class Circle:
    center: Point
    through: Point

    def radius2(self) -> Constructible:
        return (self.through - self.center).norm2()

    def radius(self) -> Constructible:
        return self.radius2().sqrt()

    def contains(self, p: Point) -> bool:
        return (p - self.center).norm2() == self.radius2()

    def same_as(self, other: "Circle") -> bool:
        return self.center == other.center and self.radius2() == other.radius2()

    def __str__(self) -> str:
        return f"circle center {self.center} through {self.through}"


GeomObject = Union[Line, Circle]


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise GeometryError("degenerate line")
    return Line(p, q)


def circle_center_through(c: Point, p: Point) -> Circle:
    if c == p:
        raise GeometryError("degenerate circle")
    return Circle(c, p)


def distance(p: Point, q: Point) -> Constructible:
    return (q - p).norm2().sqrt()


def midpoint(p: Point, q: Point) -> Point:
    return (p + q).scaled(from_rational(1, 2))


def point_on_ray(origin: Point, toward: Point, length) -> Point:
    """
    Point at `length` from origin along the ray origin -> toward.

    Raises:
        GeometryError: degenerate ray or negative length
    """
    length = Constructible.coerce(length)
    if origin == toward:
        raise GeometryError("degenerate ray")
    if length.sign() < 0:
        raise GeometryError("negative length")
    if length.is_zero():
        return origin
    d = toward - origin
    return origin + d.scaled(length / d.norm2().sqrt())


def _line_line(a: Line, b: Line) -> List[Point]:
    da, db = a.direction, b.direction
    denom = da.cross(db)
    if denom.is_zero():
        if a.same_as(b):
            raise GeometryError("infinite intersection")
        return []
    t = (b.p0 - a.p0).cross(db) / denom
    return [a.at(t)]


def _line_circle(line: Line, circle: Circle) -> List[Point]:
    d = line.direction
    f = line.p0 - circle.center
    a = d.norm2()
    b = f.dot(d) * 2
    c = f.norm2() - circle.radius2()
    disc = b * b - a * c * 4
    s = disc.sign()
    if s < 0:
        return []
    if s == 0:
        return [line.at(-b / (a * 2))]
    root = disc.sqrt()
    t1 = (-b - root) / (a * 2)
    t2 = (-b + root) / (a * 2)
    return [line.at(t1), line.at(t2)]


def _circle_circle(c1: Circle, c2: Circle) -> List[Point]:
    e = c2.center - c1.center
    d2 = e.norm2()
    if d2.is_zero():
        if c1.radius2() == c2.radius2():
            raise GeometryError("infinite intersection")
        return []
    r1 = c1.radius2()
    r2 = c2.radius2()
    k = (d2 + r1 - r2) / (d2 * 2)
    m2 = r1 / d2 - k * k
    s = m2.sign()
    if s < 0:
        return []
    base = c1.center + e.scaled(k)
    if s == 0:
        return [base]
    offset = e.rot90().scaled(m2.sqrt())
    return [base + offset, base - offset]


def intersect(a: GeomObject, b: GeomObject) -> List[Point]:
    """
    Ordered intersection points of two objects (0, 1 or 2 of them).

    Raises:
        GeometryError: identical objects ("infinite intersection")
    """
    if isinstance(a, Line) and isinstance(b, Line):
        return _line_line(a, b)
    if isinstance(a, Line) and isinstance(b, Circle):
        return _line_circle(a, b)
    if isinstance(a, Circle) and isinstance(b, Line):
        return _line_circle(b, a)
    if isinstance(a, Circle) and isinstance(b, Circle):
        return _circle_circle(a, b)
    raise GeometryError(f"cannot intersect {type(a).__name__} with {type(b).__name__}")

