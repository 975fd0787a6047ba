"""
Recursive-descent parser and static checker for .construct scripts.

    program := {stmt NEWLINE}
    stmt    := "unit" NAME NAME
             | "point" NAME "=" ( "(" RAT "," RAT ")"
                                | "intersect" NAME NAME [sel]
                                | "midpoint" NAME NAME
                                | "onray" NAME NAME "dist" lenexpr )
             | "line" NAME "=" ( "through" NAME NAME | "perp" NAME "to" NAME )
             | "circle" NAME "=" ( "center" NAME "through" NAME | "diameter" NAME NAME )
             | "points" NAME {NAME} "=" "divide" NAME NAME INT
             | "len" NAME "=" lenexpr
    sel     := "near" NAME | "far" NAME | "side" NAME "of" NAME
             | "opposite" NAME "of" NAME | "idx" INT

Names are checked as they are defined: every reference must name an
earlier binding of the right kind.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from construction.expressions import (
    evaluate, make_binop, make_neg, make_sqrt, names_in, needs_unit,
)
from construction.program import (
    CircleOnDiameter, Dist, Divide, DrawCircle, DrawLine, Expr, Far, Index,
    InitialPoint, Intersect, LengthDef, LengthProduct, LengthQuotient,
    LengthSqrt, Midpoint, Near, Num, OnRay, OppositeSide, PerpThrough, Program,
    Ref, SameSide, Selector, Sqrt, Step, BinOp,
)
from construction.scanner import EOF, KEYWORDS, NEWLINE, Scanner, Token
from field import Constructible
from utils.errors import FieldError, ParseError

POINT, LINE, CIRCLE, LENGTH = "point", "line", "circle", "length"


class Parser:
    def __init__(self, src: str, name: str = "program", allow_negation: bool = False,
                 kinds: Optional[Dict[str, str]] = None):
        self._tokens: List[Token] = Scanner(src).tokens()
        self._pos = 0
        self._name = name
        self._allow_negation = allow_negation
        self._kinds: Dict[str, str] = dict(kinds or {})
        self._unit: Optional[Tuple[str, str]] = None

    # ------------------------------------------------------------------
    # Entry points

    def parse(self) -> Program:
        steps: List[Step] = []
        while True:
            self._skip_newlines()
            if self._current.kind == EOF:
                break
            step = self._statement()
            if step is not None:
                steps.append(step)
            self._end_of_statement()
        return Program(self._name, tuple(steps), self._unit)

    def parse_expression(self) -> Expr:
        self._skip_newlines()
        expr = self._additive()
        self._skip_newlines()
        if self._current.kind != EOF:
            self._fail(f"unexpected {self._current.describe()} after expression")
        return expr

    # ------------------------------------------------------------------
    # Token helpers

    @property
    def _current(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        if token.kind != EOF:
            self._pos += 1
        return token

    def _fail(self, message: str, token: Optional[Token] = None):
        raise ParseError(message, (token or self._current).location)

    def _consume_keyword(self, *words: str) -> str:
        token = self._current
        if token.kind != "name" or token.value not in words:
            expected = " or ".join(f"`{w}`" for w in words)
            self._fail(f"expected {expected}, found {token.describe()}")
        return self._advance().value

    def _consume_symbol(self, symbol: str) -> None:
        if not self._current.is_symbol(symbol):
            self._fail(f"expected `{symbol}`, found {self._current.describe()}")
        self._advance()

    def _consume_int(self) -> int:
        if self._current.kind != "int":
            self._fail(f"expected an integer, found {self._current.describe()}")
        return self._advance().value

    def _consume_name(self) -> Token:
        token = self._current
        if token.kind != "name":
            self._fail(f"expected a name, found {token.describe()}")
        if token.value in KEYWORDS:
            self._fail(f"`{token.value}` is a reserved word")
        return self._advance()

    def _skip_newlines(self) -> None:
        while self._current.kind == NEWLINE:
            self._advance()

    def _end_of_statement(self) -> None:
        if self._current.kind not in (NEWLINE, EOF):
            self._fail(f"unexpected {self._current.describe()}")

    # ------------------------------------------------------------------
    # Name checking

    def _define(self, token: Token, kind: str) -> str:
        name = token.value
        if name in self._kinds:
            self._fail(f"duplicate name `{name}`", token)
        self._kinds[name] = kind
        return name

    def _reference(self, kind: str, *allowed: str) -> str:
        token = self._consume_name()
        self._check_reference(token.value, token, (kind,) + allowed)
        return token.value

    def _check_reference(self, name: str, token: Token, kinds: Tuple[str, ...]) -> None:
        actual = self._kinds.get(name)
        if actual is None:
            self._fail(f"unknown name `{name}`", token)
        if actual not in kinds:
            self._fail(f"`{name}` is a {actual}, expected a {' or '.join(kinds)}", token)

    def _require_unit(self, token: Token) -> None:
        if self._unit is None:
            self._fail("missing unit: declare `unit P Q` before this step", token)

    # ------------------------------------------------------------------
    # Statements

    def _statement(self) -> Optional[Step]:
        start = self._current
        keyword = self._consume_keyword("unit", "point", "line", "circle", "points", "len")
        if keyword == "unit":
            self._unit_declaration(start)
            return None
        if keyword == "points":
            return self._divide(start)
        target = self._consume_name()
        self._consume_symbol("=")
        if keyword == "point":
            step = self._point(target, start)
            self._define(target, POINT)
        elif keyword == "line":
            step = self._line(target, start)
            self._define(target, LINE)
        elif keyword == "circle":
            step = self._circle(target, start)
            self._define(target, CIRCLE)
        else:
            step = self._length(target, start)
            self._define(target, LENGTH)
        return step

    def _unit_declaration(self, start: Token) -> None:
        if self._unit is not None:
            self._fail("unit declared twice", start)
        p = self._reference(POINT)
        q = self._reference(POINT)
        if p == q:
            self._fail("unit needs two different points", start)
        self._unit = (p, q)

    def _point(self, target: Token, start: Token) -> Step:
        name = target.value
        location = start.location
        if self._current.is_symbol("("):
            self._advance()
            x = self._signed_rational()
            self._consume_symbol(",")
            y = self._signed_rational()
            self._consume_symbol(")")
            return InitialPoint(name, x, y, location)
        form = self._consume_keyword("intersect", "midpoint", "onray")
        if form == "intersect":
            a = self._reference(LINE, CIRCLE)
            b = self._reference(LINE, CIRCLE)
            selector = None
            if self._current.kind == "name":
                selector = self._selector()
            return Intersect(name, a, b, selector, location)
        if form == "midpoint":
            return Midpoint(name, self._reference(POINT), self._reference(POINT), location)
        origin = self._reference(POINT)
        toward = self._reference(POINT)
        self._consume_keyword("dist")
        length = self._checked_expression(start)
        return OnRay(name, origin, toward, length, location)

    def _line(self, target: Token, start: Token) -> Step:
        form = self._consume_keyword("through", "perp")
        if form == "through":
            return DrawLine(target.value, self._reference(POINT), self._reference(POINT),
                            start.location)
        point = self._reference(POINT)
        self._consume_keyword("to")
        line = self._reference(LINE)
        return PerpThrough(target.value, point, line, start.location)

    def _circle(self, target: Token, start: Token) -> Step:
        form = self._consume_keyword("center", "diameter")
        if form == "center":
            center = self._reference(POINT)
            self._consume_keyword("through")
            return DrawCircle(target.value, center, self._reference(POINT), start.location)
        return CircleOnDiameter(target.value, self._reference(POINT), self._reference(POINT),
                                start.location)

    def _divide(self, start: Token) -> Step:
        targets = [self._consume_name()]
        while self._current.kind == "name":
            targets.append(self._consume_name())
        self._consume_symbol("=")
        self._consume_keyword("divide")
        p = self._reference(POINT)
        q = self._reference(POINT)
        n_token = self._current
        n = self._consume_int()
        if n < 2:
            self._fail("divide needs at least 2 parts", n_token)
        if len(targets) != n - 1:
            self._fail(f"bad arity: divide into {n} parts defines {n - 1} points, "
                       f"got {len(targets)}", start)
        names = tuple(self._define(t, POINT) for t in targets)
        return Divide(names, p, q, n, start.location)

    def _length(self, target: Token, start: Token) -> Step:
        expr = self._checked_expression(start)
        name = target.value
        if isinstance(expr, BinOp) and isinstance(expr.left, Ref) and isinstance(expr.right, Ref):
            if expr.op == "*":
                return LengthProduct(name, expr.left.name, expr.right.name, start.location)
            if expr.op == "/":
                return LengthQuotient(name, expr.left.name, expr.right.name, start.location)
        if isinstance(expr, Sqrt) and isinstance(expr.arg, Ref):
            return LengthSqrt(name, expr.arg.name, start.location)
        return LengthDef(name, expr, start.location)

    def _checked_expression(self, start: Token) -> Expr:
        expr = self._additive()
        if needs_unit(expr):
            self._require_unit(start)
        return expr

    def _selector(self) -> Selector:
        token = self._current
        form = self._consume_keyword("near", "far", "side", "opposite", "idx")
        if form == "near":
            return Near(self._reference(POINT))
        if form == "far":
            return Far(self._reference(POINT))
        if form == "idx":
            index = self._consume_int()
            if index not in (0, 1):
                self._fail("idx must be 0 or 1", token)
            return Index(index)
        point = self._reference(POINT)
        self._consume_keyword("of")
        line = self._reference(LINE)
        if form == "side":
            return SameSide(line, point)
        return OppositeSide(line, point)

    def _signed_rational(self) -> Fraction:
        negative = False
        if self._current.is_symbol("-"):
            self._advance()
            negative = True
        value = Fraction(self._consume_int())
        if self._current.is_symbol("/"):
            token = self._advance()
            denominator = self._consume_int()
            if denominator == 0:
                self._fail("division by zero", token)
            value /= denominator
        return -value if negative else value

    # ------------------------------------------------------------------
    # Length expressions

    def _binary_left(self, ops: str, sub_elem):
        left = sub_elem()
        while self._current.kind == "symbol" and self._current.value in ops:
            token = self._advance()
            right = sub_elem()
            try:
                left = make_binop(token.value, left, right)
            except FieldError as e:
                self._fail(str(e), token)
        return left

    def _additive(self) -> Expr:
        return self._binary_left("+-", self._multiplicative)

    def _multiplicative(self) -> Expr:
        return self._binary_left("*/", self._unary)

    def _unary(self) -> Expr:
        if self._current.is_symbol("-"):
            token = self._advance()
            if not self._allow_negation:
                self._fail("negative lengths are not allowed", token)
            return make_neg(self._unary())
        return self._primary()

    def _primary(self) -> Expr:
        token = self._current
        if token.kind == "int":
            self._advance()
            return Num(Fraction(token.value))
        if token.is_symbol("("):
            self._advance()
            expr = self._additive()
            self._consume_symbol(")")
            return expr
        if token.is_keyword("dist"):
            self._advance()
            self._consume_symbol("(")
            a = self._reference(POINT)
            self._consume_symbol(",")
            b = self._reference(POINT)
            self._consume_symbol(")")
            return Dist(a, b)
        if token.is_keyword("sqrt"):
            self._advance()
            self._consume_symbol("(")
            arg = self._additive()
            self._consume_symbol(")")
            return make_sqrt(arg)
        if token.kind == "name":
            return Ref(self._reference(LENGTH))
        self._fail(f"expected a length, found {token.describe()}")


def parse(text: str, name: str = "program") -> Program:
    """
    Parse and check a construction script.

    Raises:
        ParseError: syntax errors, unknown or duplicate names, bad arity,
            missing unit
    """
    return Parser(text, name).parse()


def parse_expression(text: str) -> Expr:
    """Parse a free-standing length expression over rationals and sqrt."""
    expr = Parser(text, "expression", allow_negation=True).parse_expression()
    if names_in(expr):
        raise ParseError(f"unknown name `{names_in(expr)[0]}`")
    return expr


def evaluate_constant(text: str) -> Constructible:
    """Exact value of a constant expression such as "sqrt(6/5*(1+(1+sqrt(5))/2))"."""
    return evaluate(parse_expression(text), {})
