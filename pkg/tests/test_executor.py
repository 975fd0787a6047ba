from fractions import Fraction

import pytest

from catalog import builtin_program
from conftest import BUILTINS, executed
from construction import execute, parse, resolve_selector
from construction.program import Far, Index, Intersect, Near
from field import from_rational, sqrt
from geometry import Point, distance
from utils.errors import ExecutionError

SIX_FIFTHS_SIDE = sqrt(from_rational(6, 5) * (1 + (1 + sqrt(5)) / 2))

AXIS_AND_CIRCLE = (
    "point O = (0, 0)\n"
    "point B = (1, 0)\n"
    "line x = through O B\n"
    "circle c = center O through B\n"
)


def run_error(text: str) -> ExecutionError:
    with pytest.raises(ExecutionError) as info:
        execute(parse(text))
    return info.value


class TestExecute:
    def test_dixon_side(self):
        w = executed("dixon-phi")
        assert distance(w.point("F"), w.point("K")) == SIX_FIFTHS_SIDE

    def test_six_step_side(self):
        w = executed("chu-phi")
        assert distance(w.point("M"), w.point("H")) == SIX_FIFTHS_SIDE

    def test_dixon_points(self):
        w = executed("dixon-phi")
        assert w.point("C") == Point.of(0, from_rational(-1, 2))
        assert w.point("E") == Point.of(0, (sqrt(5) - 1) / 2)

    def test_six_step_d(self):
        assert executed("chu-phi").point("D") == Point.of(-sqrt(5), 0)

    def test_divide(self):
        w = execute(parse("point P = (0, 0)\npoint Q = (1, 2)\npoints a b = divide P Q 3"))
        assert w.point("a") == Point.of(from_rational(1, 3), from_rational(2, 3))
        assert w.point("b") == Point.of(from_rational(2, 3), from_rational(4, 3))

    def test_lengths(self):
        w = execute(parse(AXIS_AND_CIRCLE + "unit O B\nlen a = sqrt(2)\nlen b = a * a\n"
                          "len inv = 1 / a\n"))
        assert w["b"] == 2
        assert w["inv"] == sqrt(2) / 2

    def test_trace_resolves_selectors(self):
        w = executed("chu-phi")
        for step in w.trace:
            if isinstance(step, Intersect):
                assert step.selector is None or isinstance(step.selector, Index)

    def test_diameters_recorded(self):
        assert executed("chu-phi").diameters == {"nb": ("N", "B")}

    @pytest.mark.parametrize("name", BUILTINS)
    def test_trace_replay(self, name):
        w = executed(name)
        again = execute(w.trace_program())
        for point_name, point in w.points():
            assert again.point(point_name) == point

    @pytest.mark.parametrize("name", ["dixon-phi", "chu9-right"])
    def test_deterministic(self, name):
        first = execute(builtin_program(name))
        second = execute(builtin_program(name))
        assert list(first.bindings) == list(second.bindings)
        assert first.trace == second.trace
        for point_name, point in first.points():
            assert second.point(point_name) == point


class TestExecutionErrors:
    def test_ambiguous_near(self):
        error = run_error(AXIS_AND_CIRCLE + "point P = intersect x c near O")
        assert error.step == "P"
        assert "ambiguous" in str(error)

    def test_two_candidates_no_selector(self):
        error = run_error(AXIS_AND_CIRCLE + "point P = intersect x c")
        assert "ambiguous" in str(error)

    def test_anchor_on_selector_line(self):
        error = run_error(AXIS_AND_CIRCLE + "point Y = (0, 1)\nline y = through O Y\n"
                          "point P = intersect x c side B of y\n"
                          "point Q = intersect x c opposite B of y\n"
                          "point R = intersect y c side B of x")
        assert error.step == "R"
        assert "selector point lies on the selector line" in str(error)

    def test_empty_side(self):
        error = run_error(AXIS_AND_CIRCLE + "point Y = (0, 1)\nline y = through O Y\n"
                          "point V = (2, 0)\npoint V1 = (2, 1)\nline v = through V V1\n"
                          "point W = (3, 0)\npoint R = intersect y c side W of v")
        assert error.step == "R"
        assert "selector empty" in str(error)

    def test_no_intersection(self):
        error = run_error(AXIS_AND_CIRCLE + "point Y = (0, 5)\npoint Z = (1, 5)\n"
                          "line top = through Y Z\npoint P = intersect top c")
        assert "do not intersect" in str(error)

    def test_degenerate_circle(self):
        error = run_error("point O = (0, 0)\npoint P = (0, 0)\ncircle c = center O through P")
        assert error.step == "c"
        assert "degenerate circle" in str(error)

    def test_identical_objects(self):
        error = run_error(AXIS_AND_CIRCLE + "point D = (2, 0)\nline x2 = through B D\n"
                          "point P = intersect x x2")
        assert "infinite intersection" in str(error)

    def test_length_division_by_zero(self):
        error = run_error(AXIS_AND_CIRCLE + "unit O B\nlen z = dist(O, B) - 1\n"
                          "len q = dist(O, B) / z")
        assert error.step == "q"
        assert "division by zero" in str(error)

    def test_unit_must_be_one(self):
        error = run_error("point A = (0, 0)\npoint B = (2, 0)\nunit A B")
        assert "unit segment must have length 1" in str(error)


class TestResolveSelector:
    E = Point.of(0, (sqrt(5) - 1) / 2)
    E2 = Point.of(0, -(1 + sqrt(5)) / 2)

    def test_far(self):
        chosen = resolve_selector([self.E, self.E2], Far("D"), {"D": Point.of(0, -1)})
        assert chosen == self.E

    def test_near(self):
        chosen = resolve_selector([self.E, self.E2], Near("D"), {"D": Point.of(0, -1)})
        assert chosen == self.E2

    def test_single_candidate(self):
        p = Point.of(1, 1)
        assert resolve_selector([p], Near("Q"), {"Q": Point.of(5, 5)}) == p
        assert resolve_selector([p], None, {}) == p

    def test_equidistant(self):
        with pytest.raises(ExecutionError, match="ambiguous"):
            resolve_selector([Point.of(-1, 0), Point.of(1, 0)], Near("O"), {"O": Point.of(0, 0)})

    def test_index_out_of_range(self):
        with pytest.raises(ExecutionError, match="selector empty"):
            resolve_selector([Point.of(Fraction(1), 0)], Index(1), {})
