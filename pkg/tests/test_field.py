from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from field import (
    ONE,
    ZERO,
    Constructible,
    approx_interval,
    arith,
    equals,
    from_rational,
    sign,
    sqrt,
    to_decimal,
)
from utils.errors import FieldError

PHI = (1 + sqrt(5)) / 2

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=100)

# Nested radical sqrt(1 + sqrt(2)) sits one level above sqrt(2), so sums
# over this basis reach towers of depth four.
RADICALS = (sqrt(2), sqrt(3), sqrt(5), sqrt(1 + sqrt(2)))


@st.composite
def tower_elements(draw):
    value = from_rational(draw(rationals))
    for radical in draw(st.lists(st.sampled_from(RADICALS), max_size=3, unique_by=id)):
        value = value + radical * draw(rationals)
    return value


elements = tower_elements()
many = settings(max_examples=1000, deadline=None)


class TestFromRational:
    def test_decimal_of_355_over_113(self):
        assert to_decimal(from_rational(355, 113), 7) == "3.1415929"

    def test_zero_numerator(self):
        assert from_rational(0, 5).is_zero()

    def test_canonical(self):
        assert from_rational(6, 5).as_rational() == Fraction(6, 5)
        assert from_rational(12, 10) == from_rational(6, 5)

    def test_zero_denominator(self):
        with pytest.raises(FieldError, match="division by zero"):
            from_rational(1, 0)


class TestArith:
    def test_one_plus_phi(self):
        assert arith("add", 1, PHI) == (3 + sqrt(5)) / 2

    @given(x=elements)
    def test_multiplicative_identity(self, x):
        assert arith("mul", x, 1) == x

    def test_radicand_identity(self):
        a = 3 / sqrt(5)
        assert arith("mul", a, a + 1) == from_rational(6, 5) * (1 + PHI)

    def test_division_by_zero(self):
        with pytest.raises(FieldError, match="division by zero"):
            arith("div", ONE, sqrt(5) - sqrt(5))

    def test_neg(self):
        assert arith("neg", sqrt(2)) + sqrt(2) == 0


class TestSqrt:
    def test_dixon_ce(self):
        assert sqrt(from_rational(5, 4)) == sqrt(5) / 2

    def test_zero(self):
        assert sqrt(ZERO).is_zero()

    def test_pu(self):
        assert sqrt(from_rational(269, 64)) == sqrt(269) / 8

    def test_perfect_square_keeps_tower(self):
        x = (1 + sqrt(2)) ** 2
        root = x.sqrt()
        assert root == 1 + sqrt(2)
        assert root.depth == x.depth

    def test_rational_square(self):
        assert sqrt(from_rational(9, 4)).as_rational() == Fraction(3, 2)

    def test_negative_radicand(self):
        with pytest.raises(FieldError, match="negative radicand"):
            sqrt(1 - sqrt(2))

    @many
    @given(x=elements)
    def test_square_of_root(self, x):
        x = abs(x)
        r = sqrt(x)
        assert r.sign() >= 0
        assert r * r == x


class TestSign:
    def test_nine_place_radicand_positive(self):
        assert sign(15 * sqrt(5) - 7) == 1

    def test_golden_identity(self):
        assert sign(PHI * PHI - PHI - 1) == 0

    def test_ln_positive(self):
        assert sign(sqrt(3) / sqrt(sqrt(5)) - sqrt(7) / 5) == 1

    @given(x=elements)
    def test_consistent_with_intervals(self, x):
        for bits in (8, 32, 96):
            enclosure = approx_interval(x, bits)
            if enclosure.lo > 0:
                assert x.sign() == 1
            if enclosure.hi < 0:
                assert x.sign() == -1


class TestEquals:
    def test_dixon_side(self):
        left = 2 * sqrt(3 * (1 + PHI) / 10)
        right = sqrt(from_rational(6, 5) * (1 + PHI))
        assert equals(left, right)

    @given(x=elements)
    def test_reflexive(self, x):
        assert equals(x, x)

    def test_no_radicand(self):
        ln = sqrt(3) / sqrt(sqrt(5)) - sqrt(7) / 5
        nm = sqrt(3) / sqrt(sqrt(5)) + sqrt(7) / 5
        assert equals(ln * nm, (15 * sqrt(5) - 7) / 25)

    def test_distinct_values(self):
        assert not equals(sqrt(2) + sqrt(3), sqrt(5))

    @given(x=elements, y=elements)
    def test_agrees_with_decimals(self, x, y):
        if equals(x, y):
            assert to_decimal(x, 40) == to_decimal(y, 40)
        else:
            assert any(to_decimal(x, k) != to_decimal(y, k) for k in (5, 20, 60))


class TestFieldAxioms:
    @many
    @given(x=elements, y=elements, z=elements)
    def test_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x + y == y + x
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert (x + (-x)).is_zero()
        if not x.is_zero():
            assert x * (1 / x) == 1

    @given(x=elements)
    def test_multiplicative_inverse(self, x):
        assume(not x.is_zero())
        assert (1 / x) * x == 1
        assert x / x == 1


class TestToDecimal:
    def test_nine_place_value(self):
        v = from_rational(63, 25) * (1 + from_rational(5, 2) * (15 * sqrt(5) - 7) / 269)
        assert to_decimal(v, 10) == "3.1415926538"

    def test_half(self):
        assert to_decimal(from_rational(1, 2), 3) == "0.500"

    def test_dixon_value(self):
        assert to_decimal(from_rational(6, 5) * (1 + PHI), 4) == "3.1416"

    def test_half_even(self):
        assert to_decimal(from_rational(1, 8), 2) == "0.12"
        assert to_decimal(from_rational(3, 8), 2) == "0.38"

    def test_negative(self):
        assert to_decimal(-sqrt(2), 5) == "-1.41421"

    @given(x=elements)
    def test_agrees_with_finer_enclosure(self, x):
        digits = 15
        fine = approx_interval(x, 4 * 64)
        factor = 10 ** digits
        if round(fine.lo * factor) == round(fine.hi * factor):
            expected = round(fine.lo * factor)
            assert to_decimal(x, digits) == to_decimal(from_rational(expected, factor), digits)

    def test_rejects_zero_digits(self):
        with pytest.raises(ValueError):
            to_decimal(ONE, 0)


class TestApproxInterval:
    def test_sqrt5(self):
        enclosure = approx_interval(sqrt(5), 20)
        assert 0 < enclosure.lo and enclosure.lo ** 2 <= 5 <= enclosure.hi ** 2
        assert enclosure.hi - enclosure.lo <= Fraction(3, 2 ** 19)

    def test_zero(self):
        enclosure = approx_interval(ZERO, 12)
        assert enclosure.lo == enclosure.hi == 0

    def test_phi(self):
        enclosure = approx_interval(PHI, 50)
        # phi = (1 + sqrt(5)) / 2
        assert (2 * enclosure.lo - 1) ** 2 <= 5 <= (2 * enclosure.hi - 1) ** 2
        assert enclosure.hi - enclosure.lo <= Fraction(3, 2 ** 49)
        assert to_decimal(PHI, 10) == "1.6180339887"

    @given(x=elements)
    def test_nested(self, x):
        coarse = approx_interval(x, 16)
        fine = approx_interval(x, 48)
        assert coarse.lo <= fine.lo <= fine.hi <= coarse.hi


class TestFormatting:
    def test_str(self):
        assert str(from_rational(3, 4)) == "3/4"
        assert str(ZERO) == "0"

    def test_coerce_rejects_float(self):
        with pytest.raises(TypeError):
            Constructible.coerce(0.5)
