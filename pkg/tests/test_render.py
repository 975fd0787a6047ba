import xml.etree.ElementTree as ET
from fractions import Fraction
from math import hypot

import pytest

from catalog import builtin
from conftest import BUILTINS, executed
from construction import Workspace, execute, parse
from geometry import Circle, Point
from render import Highlight, RenderStyle, SvgRenderer, render
from utils.errors import RenderError

SVG = "{http://www.w3.org/2000/svg}"


def parse_svg(text: str) -> ET.Element:
    return ET.fromstring(text.encode("utf-8"))


class TestRender:
    @pytest.mark.parametrize("name", BUILTINS)
    def test_valid_document(self, name):
        root = parse_svg(render(executed(name), builtin(name).highlight))
        assert root.tag == f"{SVG}svg"
        assert len(root.get("viewBox").split()) == 4

    @pytest.mark.parametrize("name", BUILTINS)
    def test_deterministic(self, name):
        catalog_entry = builtin(name)
        fresh = execute(parse(catalog_entry.source(), name))
        assert render(executed(name), catalog_entry.highlight) == \
            render(fresh, catalog_entry.highlight)

    def test_single_point(self):
        root = parse_svg(render(execute(parse("point A = (0, 0)"))))
        assert len(list(root.iter(f"{SVG}circle"))) == 1
        assert [t.text for t in root.iter(f"{SVG}text")] == ["A"]

    def test_no_labels(self):
        style = RenderStyle(labels=False)
        root = parse_svg(render(executed("dixon-phi"), None, style))
        assert list(root.iter(f"{SVG}text")) == []

    def test_circles_drawn(self):
        w = executed("chu-phi")
        root = parse_svg(render(w, None, RenderStyle(labels=False)))
        n_points = sum(1 for _ in w.points())
        n_circles = sum(1 for _, obj in w.objects() if isinstance(obj, Circle))
        assert len(list(root.iter(f"{SVG}circle"))) == n_points + n_circles

    def test_precision_changes_output(self):
        w = executed("chu-phi")
        assert render(w, None, RenderStyle(precision=8)) != render(w, None, RenderStyle(precision=12))

    def test_empty_workspace(self):
        with pytest.raises(RenderError, match="empty workspace"):
            render(Workspace("empty"))

    def test_unknown_circle(self):
        with pytest.raises(RenderError, match="unknown circle `nope`"):
            render(executed("chu-phi"), Highlight(circle="nope"))

    def test_unknown_square_point(self):
        with pytest.raises(RenderError, match="unknown point `Zed`"):
            render(executed("chu-phi"), Highlight(square_side=("M", "Zed")))

    def test_unit_needs_declaration(self):
        w = execute(parse("point A = (0, 0)\npoint B = (1, 0)"))
        with pytest.raises(RenderError, match="unit"):
            render(w, Highlight(circle="unit"))

    def test_invalid_style(self):
        with pytest.raises(RenderError, match="precision"):
            render(executed("chu-phi"), None, RenderStyle(precision=3))

    def test_style_overrides(self):
        style = RenderStyle().with_overrides(canvas_size=400, margin=None)
        assert style.canvas_size == 400
        assert style.margin == RenderStyle().margin


class TestGeometry:
    def test_square_on_right_side(self):
        w = execute(parse("point P = (0, 0)\npoint Q = (1, 0)"))
        corners = SvgRenderer(w).square_corners(("P", "Q"))
        assert corners == [Point.of(0, 0), Point.of(1, 0), Point.of(1, -1), Point.of(0, -1)]

    @pytest.mark.parametrize("name", ["dixon-phi", "chu-phi", "chu9-full"])
    def test_square_to_circle_ratio(self, name):
        w = executed(name)
        highlight = builtin(name).highlight
        renderer = SvgRenderer(w)
        p, q = [renderer.xy(c) for c in renderer.square_corners(highlight.square_side)[:2]]
        side = hypot(float(q[0] - p[0]), float(q[1] - p[1]))
        circle = renderer.highlight_circle(highlight.circle)
        radius = float(renderer.num(circle.radius()))
        exact = renderer.square_corners(highlight.square_side)
        expected = float(((exact[1] - exact[0]).norm2() / circle.radius2()).sqrt())
        assert abs(side / radius - expected) < 10 ** (-renderer.style.precision + 2)


class TestLabels:
    SCENE = ("point A = (0, 0)\npoint B = (2, 0)\npoint C = (1, 0)\npoint D = (1, 3)\n"
             "line ab = through A B\ncircle dc = center D through C\n")

    def directions(self, text: str):
        renderer = SvgRenderer(execute(parse(text)))
        xys = [renderer.xy(p) for _, p in renderer.w.points()]
        centroid = (sum(x for x, _ in xys) / len(xys), sum(y for _, y in xys) / len(xys))
        incidence = renderer.incidence()
        return {name: renderer.label_direction(name, centroid, incidence)
                for name, _ in renderer.w.points()}

    def test_incidence(self):
        renderer = SvgRenderer(execute(parse(self.SCENE)))
        assert [on for _, on in renderer.incidence()] == [{"A", "B", "C"}, {"C"}]

    def test_densest_line_wins(self):
        # C lies on ab (three points) and on dc (one point); y is flipped, D is above
        assert self.directions(self.SCENE)["C"] == (0, 2)

    def test_circle_pushes_outward(self):
        directions = self.directions("point O = (0, 0)\npoint B = (1, 0)\n"
                                     "circle c = center O through B\n")
        assert directions["B"] == (1, 0)

    def test_free_point_moves_off_centroid(self):
        assert self.directions(self.SCENE)["D"] == (0, Fraction(-9, 4))

    def test_labels_follow_rule(self):
        w = execute(parse(self.SCENE))
        root = parse_svg(render(w))
        labels = {t.text: (float(t.get("x")), float(t.get("y"))) for t in root.iter(f"{SVG}text")}
        assert labels["C"][0] == pytest.approx(1.0)
        assert labels["C"][1] > 0
        assert labels["D"][1] < -3
