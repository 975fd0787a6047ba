"""
SVG rendering of an executed workspace using drawsvg.

The drawing keeps the construction's own units, with y flipped so the
figure reads upward, and the viewBox fits it onto the canvas. Every
coordinate is an exact value rounded (half-even) to the style's
precision, so equal inputs give byte-identical documents.
"""

from fractions import Fraction
from math import hypot
from typing import FrozenSet, List, Optional, Tuple

import drawsvg as draw

from construction.executor import Workspace
from field import Constructible, to_decimal
from geometry import Circle, GeomObject, Line, Point, circle_center_through
from render.style import Highlight, RenderStyle
from utils.errors import RenderError

XY = Tuple[Fraction, Fraction]


class SvgRenderer:
    """Builds one SVG document for a workspace."""

    def __init__(self, w: Workspace, style: Optional[RenderStyle] = None):
        self.w = w
        self.style = (style or RenderStyle()).validate()
        self._extent: List[XY] = []

    # ------------------------------------------------------------------
    # Exact -> rounded conversion

    def num(self, value: Constructible) -> Fraction:
        return Fraction(to_decimal(value, self.style.precision))

    def xy(self, p: Point) -> XY:
        return self.num(p.x), -self.num(p.y)

    def out(self, value: Fraction) -> float:
        return float(round(value, self.style.precision))

    def _point(self, name: str) -> Point:
        value = self.w.bindings.get(name)
        if not isinstance(value, Point):
            raise RenderError(f"unknown point `{name}`")
        return value

    # ------------------------------------------------------------------
    # Scene

    def highlight_circle(self, ref: str) -> Circle:
        if ref == "unit":
            if self.w.unit is None:
                raise RenderError("highlight `unit` needs a declared unit")
            ref = ":".join(self.w.unit)
        if ":" in ref:
            center, through = ref.split(":", 1)
            return circle_center_through(self._point(center), self._point(through))
        value = self.w.bindings.get(ref)
        if not isinstance(value, Circle):
            raise RenderError(f"unknown circle `{ref}`")
        return value

    def square_corners(self, side: Tuple[str, str]) -> List[Point]:
        """P, Q and the two corners on the right-hand side of P -> Q."""
        p, q = self._point(side[0]), self._point(side[1])
        d = q - p
        right = Point(d.y, -d.x)
        return [p, q, q + right, p + right]

    def line_extremes(self, line: Line) -> Tuple[XY, XY]:
        """Outermost bound points on the line (its defining points included)."""
        candidates = [self.xy(line.p0), self.xy(line.p1)]
        candidates += [self.xy(p) for _, p in self.w.points() if line.contains(p)]
        (x0, y0), (x1, y1) = candidates[0], candidates[1]
        dx, dy = x1 - x0, y1 - y0

        def along(c: XY) -> Fraction:
            return (c[0] - x0) * dx + (c[1] - y0) * dy

        return min(candidates, key=along), max(candidates, key=along)

    def circle_box(self, circle: Circle) -> Tuple[XY, Fraction]:
        center = self.xy(circle.center)
        r = self.num(circle.radius())
        self._extent += [(center[0] - r, center[1] - r), (center[0] + r, center[1] + r)]
        return center, r

    # ------------------------------------------------------------------
    # Document

    def render(self, highlight: Optional[Highlight] = None) -> str:
        points = [(name, self.xy(p)) for name, p in self.w.points()]
        if not points:
            raise RenderError("empty workspace: nothing to render")
        self._extent = [xy for _, xy in points]
        s = self.style

        fills = []
        if highlight is not None and highlight.circle:
            fills.append(("circle",) + self.circle_box(self.highlight_circle(highlight.circle)))
        side: Optional[Tuple[XY, XY]] = None
        if highlight is not None and highlight.square_side:
            corners = [self.xy(c) for c in self.square_corners(highlight.square_side)]
            self._extent += corners
            fills.append(("square", corners))
            side = corners[0], corners[1]

        circles = []
        lines = []
        for name, obj in self.w.objects():
            if isinstance(obj, Circle):
                circles.append((name,) + self.circle_box(obj))
            else:
                ends = self.line_extremes(obj)
                self._extent += list(ends)
                lines.append(ends)
        diameters = [(self.xy(self._point(p)), self.xy(self._point(q)))
                     for p, q in self.w.diameters.values()]

        xs = [x for x, _ in self._extent]
        ys = [y for _, y in self._extent]
        width = max(xs) - min(xs)
        height = max(ys) - min(ys)
        span = max(width, height) or Fraction(1)
        scale = Fraction(s.canvas_size - 2 * s.margin) / span  # pixels per unit
        pad = Fraction(s.margin) / scale

        def px(pixels: float) -> float:
            return self.out(Fraction(pixels) / scale)

        view_w = width + 2 * pad
        view_h = height + 2 * pad
        d = draw.Drawing(self.out(view_w), self.out(view_h),
                         origin=(self.out(min(xs) - pad), self.out(min(ys) - pad)))
        d.set_render_size(round(view_w * scale), round(view_h * scale))
        d.append(draw.Rectangle(self.out(min(xs) - pad), self.out(min(ys) - pad),
                                self.out(view_w), self.out(view_h), fill="#ffffff"))

        for fill in fills:
            if fill[0] == "circle":
                (cx, cy), r = fill[1], fill[2]
                d.append(draw.Circle(self.out(cx), self.out(cy), self.out(r),
                                     fill=s.highlight_fill, stroke="none"))
            else:
                flat = [self.out(v) for corner in fill[1] for v in corner]
                d.append(draw.Lines(*flat, close=True, fill=s.highlight_fill, stroke="none"))

        for _, (cx, cy), r in circles:
            d.append(draw.Circle(self.out(cx), self.out(cy), self.out(r), fill="none",
                                 stroke=s.stroke_color, stroke_width=px(s.stroke_width)))
        for (x0, y0), (x1, y1) in lines:
            d.append(draw.Line(self.out(x0), self.out(y0), self.out(x1), self.out(y1),
                               stroke=s.stroke_color, stroke_width=px(s.stroke_width)))
        for (x0, y0), (x1, y1) in diameters:
            d.append(draw.Line(self.out(x0), self.out(y0), self.out(x1), self.out(y1),
                               stroke=s.diameter_color, stroke_width=px(s.stroke_width),
                               stroke_dasharray=f"{px(4 * s.stroke_width)} {px(3 * s.stroke_width)}"))
        if side is not None:
            (x0, y0), (x1, y1) = side
            d.append(draw.Line(self.out(x0), self.out(y0), self.out(x1), self.out(y1),
                               stroke=s.accent_color, stroke_width=px(s.accent_stroke_width)))

        centroid = (sum(x for _, (x, _) in points) / len(points),
                    sum(y for _, (_, y) in points) / len(points))
        incidence = self.incidence() if s.labels else []
        for name, (x, y) in points:
            d.append(draw.Circle(self.out(x), self.out(y), px(s.point_radius),
                                 fill=s.stroke_color))
            if s.labels and not name.startswith("__"):
                lx, ly = self.label_position(name, centroid, incidence, scale)
                d.append(draw.Text(name, px(s.label_font_size), lx, ly,
                                   fill=s.stroke_color, font_family="serif",
                                   text_anchor="middle", dominant_baseline="middle"))
        return d.as_svg()

    # ------------------------------------------------------------------
    # Labels

    def incidence(self) -> List[Tuple[GeomObject, FrozenSet[str]]]:
        """Every line and circle with the names of the points lying on it."""
        return [(obj, frozenset(name for name, p in self.w.points() if obj.contains(p)))
                for _, obj in self.w.objects()]

    def label_direction(self, name: str, centroid: XY,
                        incidence: List[Tuple[GeomObject, FrozenSet[str]]]) -> XY:
        """
        Outward normal of the incident object carrying the most points.

        Circles push the label radially outward; lines push it to the side
        facing away from the centroid. A point on no object moves away from
        the centroid.
        """
        x, y = self.xy(self._point(name))
        away = (x - centroid[0], y - centroid[1])
        incident = [(obj, on) for obj, on in incidence if name in on]
        if not incident:
            return away
        densest, _ = max(incident, key=lambda item: len(item[1]))
        if isinstance(densest, Circle):
            cx, cy = self.xy(densest.center)
            return x - cx, y - cy
        (x0, y0), (x1, y1) = self.xy(densest.p0), self.xy(densest.p1)
        nx, ny = y0 - y1, x1 - x0
        if nx * away[0] + ny * away[1] < 0:
            return -nx, -ny
        return nx, ny

    def label_position(self, name: str, centroid: XY,
                       incidence: List[Tuple[GeomObject, FrozenSet[str]]],
                       scale: Fraction) -> Tuple[float, float]:
        x, y = self.xy(self._point(name))
        dx, dy = (float(v) for v in self.label_direction(name, centroid, incidence))
        norm = hypot(dx, dy)
        if norm == 0:
            dx, dy, norm = 1.0, -1.0, hypot(1.0, 1.0)
        offset = self.style.label_font_size / float(scale)
        return (round(float(x) + offset * dx / norm, self.style.precision),
                round(float(y) + offset * dy / norm, self.style.precision))


def render(w: Workspace, highlight: Optional[Highlight] = None,
           style: Optional[RenderStyle] = None) -> str:
    """
    Render a workspace as SVG 1.1 text.

    Args:
        w: Executed workspace
        highlight: Shaded circle and square, if any
        style: Render style (defaults from Config)

    Raises:
        RenderError: unknown names, empty workspace or invalid style
    """
    return SvgRenderer(w, style).render(highlight)
