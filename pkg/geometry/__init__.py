"""Exact compass-and-straightedge geometry kernel."""

from geometry.kernel import (
    Circle,
    GeomObject,
    Line,
    Point,
    circle_center_through,
    distance,
    intersect,
    line_through,
    midpoint,
    point_on_ray,
)

__all__ = [
    "Circle",
    "GeomObject",
    "Line",
    "Point",
    "circle_center_through",
    "distance",
    "intersect",
    "line_through",
    "midpoint",
    "point_on_ray",
]
