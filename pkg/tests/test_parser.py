from fractions import Fraction

import pytest

from catalog import builtin_program
from conftest import BUILTINS
from construction import format_program, parse, parse_expression
from construction.program import (
    BinOp, Dist, Divide, InitialPoint, Intersect, LengthProduct, LengthSqrt,
    Num, OnRay, Program, Ref, SameSide, Sqrt,
)
from utils.errors import ParseError

HEADER = "point A = (0, 0)\npoint B = (1, 0)\n"


def parse_error(text: str) -> ParseError:
    with pytest.raises(ParseError) as info:
        parse(text)
    return info.value


class TestParse:
    def test_empty(self):
        assert parse("") == Program("program")

    def test_comments_and_blank_lines(self):
        program = parse("# heading\n\n" + HEADER + "\n# trailing\n")
        assert program.names() == ("A", "B")

    def test_initial_point(self):
        program = parse("point P = (-3/4, 2)")
        assert program.steps == (InitialPoint("P", Fraction(-3, 4), Fraction(2)),)

    def test_intersect_with_selector(self):
        program = parse(HEADER + "line ab = through A B\n"
                        "circle c = center A through B\n"
                        "point C = intersect ab c side B of ab\n")
        step = program.steps[-1]
        assert isinstance(step, Intersect)
        assert step.selector == SameSide("ab", "B")

    def test_divide(self):
        program = parse(HEADER + "points D1 D2 D3 D4 = divide A B 5")
        step = program.steps[-1]
        assert step == Divide(("D1", "D2", "D3", "D4"), "A", "B", 5)

    def test_length_forms(self):
        program = parse(HEADER + "unit A B\n"
                        "len a = dist(A, B)\n"
                        "len b = 5/2 * a + 1\n"
                        "len c = a * b\n"
                        "len d = sqrt(c)\n")
        steps = {step.name: step for step in program.steps[2:]}
        assert steps["b"].expr == BinOp("+", BinOp("*", Num(Fraction(5, 2)), Ref("a")),
                                        Num(Fraction(1)))
        assert steps["c"] == LengthProduct("c", "a", "b")
        assert steps["d"] == LengthSqrt("d", "c")
        assert program.unit == ("A", "B")

    def test_onray_without_unit(self):
        program = parse(HEADER + "point G = onray A B dist 3 * dist(A, B) / 10")
        step = program.steps[-1]
        assert isinstance(step, OnRay)
        assert step.length == BinOp("/", BinOp("*", Num(Fraction(3)), Dist("A", "B")),
                                    Num(Fraction(10)))

    def test_locations(self):
        program = parse(HEADER + "line ab = through A B")
        assert program.steps[-1].location == (3, 1)


class TestParseErrors:
    def test_duplicate_name(self):
        error = parse_error("point A = (0,0)\npoint A = (1,0)")
        assert "duplicate name `A`" in str(error)
        assert error.location == (2, 7)

    def test_unknown_name(self):
        error = parse_error("point A = (0,0)\nline l = through A B")
        assert "unknown name `B`" in str(error)
        assert error.location == (2, 20)

    def test_wrong_kind(self):
        error = parse_error(HEADER + "circle c = center A through B\nline l = through A c")
        assert "`c` is a circle, expected a point" in str(error)

    def test_bad_arity(self):
        error = parse_error(HEADER + "points X Y = divide A B 4")
        assert "bad arity" in str(error)

    def test_missing_unit(self):
        error = parse_error(HEADER + "point C = onray A B dist 1")
        assert "missing unit" in str(error)
        assert error.location == (3, 1)

    def test_negative_length(self):
        error = parse_error(HEADER + "point C = onray A B dist -dist(A, B)")
        assert "negative lengths" in str(error)

    def test_unexpected_character(self):
        error = parse_error("point A = (0, 0) @")
        assert error.location == (1, 18)

    @pytest.mark.parametrize("text, location", [
        ("point A = (², 0)", (1, 12)),
        ("point A = (1, 0)\nlen a = ³", (2, 9)),
        ("point A = (2², 0)", (1, 13)),
    ])
    def test_non_ascii_digits(self, text, location):
        error = parse_error(text)
        assert "unexpected character" in str(error)
        assert error.location == location

    def test_bad_selector_index(self):
        error = parse_error(HEADER + "line ab = through A B\ncircle c = center A through B\n"
                            "point C = intersect ab c idx 2")
        assert "idx must be 0 or 1" in str(error)

    def test_reserved_word(self):
        error = parse_error("point line = (0, 0)")
        assert "reserved word" in str(error)

    def test_unit_twice(self):
        error = parse_error(HEADER + "unit A B\nunit B A")
        assert "unit declared twice" in str(error)

    def test_literal_division_by_zero(self):
        error = parse_error(HEADER + "unit A B\nlen x = 1/0")
        assert "division by zero" in str(error)

    def test_message_prefix(self):
        error = parse_error("point A = (0,0)\npoint A = (1,0)")
        assert str(error).startswith("line 2, column 7: ")


class TestParseExpression:
    def test_rationals_and_sqrt(self):
        assert parse_expression("sqrt(5)") == Sqrt(Num(Fraction(5)))
        assert parse_expression("sqrt(4)") == Num(Fraction(2))
        assert parse_expression("3/10") == Num(Fraction(3, 10))

    def test_negation_allowed(self):
        assert parse_expression("-1/2") == Num(Fraction(-1, 2))

    def test_rejects_names(self):
        with pytest.raises(ParseError):
            parse_expression("dist(A, B)")
        with pytest.raises(ParseError):
            parse_expression("x + 1")

    def test_trailing_input(self):
        with pytest.raises(ParseError):
            parse_expression("1 2")


class TestRoundTrip:
    @pytest.mark.parametrize("name", BUILTINS)
    def test_builtin(self, name):
        program = builtin_program(name)
        assert parse(format_program(program), program.name) == program

    def test_negative_coordinates(self):
        program = parse("point A = (-1, -3/2)\npoint B = (1/3, 0)\n")
        assert parse(format_program(program), program.name) == program
