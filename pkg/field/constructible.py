"""
Constructible numbers: exact elements of quadratic extension towers.

Values are immutable. Binary operations rewrite both operands into the
merged tower of the two (see field.tower.merge), so equality is decided
structurally and never by approximation.
"""

from fractions import Fraction
from math import floor
from typing import Optional, Tuple, Union

from field import interval as iv
from field import tower as tw
from utils.errors import FieldError

Number = Union[int, Fraction, "Constructible"]


class Constructible:
    """An element a_0 + sum(a_m * prod sqrt(r_i)) of a quadratic tower."""

    __slots__ = ("tower", "terms")

    def __init__(self, tower: tw.Tower, terms: tw.Terms):
        sparse = tw.thaw(terms)
        self.tower = tw.trim(tower, sparse)
        self.terms = terms

    # ------------------------------------------------------------------
    # Construction and coercion

    @classmethod
    def _from_sparse(cls, tower: tw.Tower, x: tw.Sparse) -> "Constructible":
        return cls(tower, tw.freeze(x))

    @staticmethod
    def coerce(value: Number) -> "Constructible":
        if isinstance(value, Constructible):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return from_rational(value)
        raise TypeError(f"cannot use {type(value).__name__} as a constructible number")

    def _aligned(self, other: "Constructible") -> Tuple[tw.Tower, tw.Sparse, tw.Sparse]:
        tower, images1, images2 = tw.merge(self.tower, other.tower)
        x = tw.thaw(self.terms)
        y = tw.thaw(other.terms)
        if not tw.is_identity(images1):
            x = tw.embed(x, images1, tower)
        if not tw.is_identity(images2):
            y = tw.embed(y, images2, tower)
        return tower, x, y

    # ------------------------------------------------------------------
    # Arithmetic

    def __add__(self, other: Number) -> "Constructible":
        try:
            other = Constructible.coerce(other)
        except TypeError:
            return NotImplemented
        tower, x, y = self._aligned(other)
        return Constructible._from_sparse(tower, tw.add(x, y))

    __radd__ = __add__

    def __neg__(self) -> "Constructible":
        return Constructible._from_sparse(self.tower, tw.neg(tw.thaw(self.terms)))

    def __sub__(self, other: Number) -> "Constructible":
        try:
            other = Constructible.coerce(other)
        except TypeError:
            return NotImplemented
        tower, x, y = self._aligned(other)
        return Constructible._from_sparse(tower, tw.sub(x, y))

    def __rsub__(self, other: Number) -> "Constructible":
        return (-self).__add__(other)

    def __mul__(self, other: Number) -> "Constructible":
        try:
            other = Constructible.coerce(other)
        except TypeError:
            return NotImplemented
        tower, x, y = self._aligned(other)
        return Constructible._from_sparse(tower, tw.mul(tower, x, y))

    __rmul__ = __mul__

    def inverse(self) -> "Constructible":
        return Constructible._from_sparse(self.tower, tw.inverse(self.tower, tw.thaw(self.terms)))

    def __truediv__(self, other: Number) -> "Constructible":
        try:
            other = Constructible.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "Constructible":
        return Constructible.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Constructible":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = from_rational(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __abs__(self) -> "Constructible":
        return -self if self.sign() < 0 else self

    def sqrt(self) -> "Constructible":
        """Nonnegative square root; reuses the tower when x is already a square there."""
        s = self.sign()
        if s < 0:
            raise FieldError("negative radicand")
        if s == 0:
            return ZERO
        x = tw.thaw(self.terms)
        root = tw.sqrt_in(self.tower, x, len(self.tower))
        if root is not None:
            if iv.sign_of(self.tower, tw.freeze(root)) < 0:
                root = tw.neg(root)
            return Constructible._from_sparse(self.tower, root)
        c, y = tw.normalize_radicand(x)
        tower = self.tower + (tw.freeze(y),)
        return Constructible._from_sparse(tower, {1 << len(self.tower): c})

    # ------------------------------------------------------------------
    # Comparison

    def sign(self) -> int:
        return iv.sign_of(self.tower, self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        try:
            other = Constructible.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def _compare(self, other: Number) -> int:
        return (self - Constructible.coerce(other)).sign()

    def __lt__(self, other: Number) -> bool:
        return self._compare(other) < 0

    def __le__(self, other: Number) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self._compare(other) >= 0

    # ------------------------------------------------------------------
    # Inspection

    @property
    def depth(self) -> int:
        return len(self.tower)

    def as_rational(self) -> Optional[Fraction]:
        """The value as a Fraction, or None when it is irrational."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return self.terms[0][1]
        return None

    def __float__(self) -> float:
        return float(iv.enclose(self.tower, self.terms, 64).midpoint)

    def __str__(self) -> str:
        return _format_terms(self.tower, self.terms)

    def __repr__(self) -> str:
        return f"Constructible({self})"


def _format_radical(tower: tw.Tower, i: int) -> str:
    radicand = _format_terms(tower[:i], tower[i])
    if Constructible(tower[:i], tower[i]).as_rational() is not None and "/" not in radicand:
        return f"√{radicand}"
    return f"√({radicand})"


def _format_terms(tower: tw.Tower, terms: tw.Terms) -> str:
    if not terms:
        return "0"
    parts = []
    for mask, coeff in terms:
        radicals = []
        i = 0
        m = mask
        while m:
            if m & 1:
                radicals.append(_format_radical(tower, i))
            m >>= 1
            i += 1
        magnitude = abs(coeff)
        if not radicals:
            text = str(magnitude)
        elif magnitude == 1:
            text = "·".join(radicals)
        else:
            text = "·".join([str(magnitude)] + radicals)
        if not parts:
            parts.append(f"-{text}" if coeff < 0 else text)
        else:
            parts.append(f"- {text}" if coeff < 0 else f"+ {text}")
    return " ".join(parts)


# ----------------------------------------------------------------------
# Module-level API


def from_rational(p: Union[int, Fraction], q: int = 1) -> Constructible:
    """
    Exact rational p/q.

    Raises:
        FieldError: if q is zero
    """
    if q == 0:
        raise FieldError("division by zero")
    value = Fraction(p) / q
    return Constructible(tw.EMPTY, ((0, value),) if value else tw.EMPTY)


ZERO = from_rational(0)
ONE = from_rational(1)


def arith(kind: str, x: Number, y: Optional[Number] = None) -> Constructible:
    """Dispatch one of add, sub, mul, div, neg."""
    x = Constructible.coerce(x)
    if kind == "neg":
        return -x
    if y is None:
        raise ValueError(f"{kind} needs two operands")
    y = Constructible.coerce(y)
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def sqrt(x: Number) -> Constructible:
    return Constructible.coerce(x).sqrt()


def sign(x: Number) -> int:
    return Constructible.coerce(x).sign()


def equals(x: Number, y: Number) -> bool:
    return Constructible.coerce(x) == Constructible.coerce(y)


def approx_interval(x: Number, precision_bits: int) -> iv.Interval:
    """
    Dyadic enclosure [k/2^p, (k+1)/2^p] with k = floor(x * 2^p).

    Intervals for increasing precision are nested; a value lying exactly
    on the grid is returned as a point interval.
    """
    if precision_bits < 1:
        raise ValueError("precision_bits must be positive")
    x = Constructible.coerce(x)
    p = precision_bits
    grid = 1 << p
    exact = x.as_rational()
    if exact is not None:
        k = floor(exact * grid)
        if k == exact * grid:
            return iv.Interval(exact, exact, p)
        return iv.Interval(Fraction(k, grid), Fraction(k + 1, grid), p)

    coarse = iv.enclose(x.tower, x.terms, 16)
    extra = int(coarse.magnitude()).bit_length()
    enclosure = iv.enclose(x.tower, x.terms, p + 4 + extra)
    k_lo = floor(enclosure.lo * grid)
    k_hi = floor(enclosure.hi * grid)
    if k_lo != k_hi:
        boundary = Fraction(k_hi, grid)
        s = (x - boundary).sign()
        if s == 0:
            return iv.Interval(boundary, boundary, p)
        k_lo = k_hi if s > 0 else k_hi - 1
    return iv.Interval(Fraction(k_lo, grid), Fraction(k_lo + 1, grid), p)


def _format_fixed(scaled: int, n_digits: int) -> str:
    digits = str(abs(scaled)).rjust(n_digits + 1, "0")
    text = f"{digits[:-n_digits]}.{digits[-n_digits:]}"
    return f"-{text}" if scaled < 0 else text


def to_decimal(x: Number, n_digits: int) -> str:
    """
    Correctly rounded (half-even) decimal with n_digits fractional digits.

    Args:
        x: Value to print
        n_digits: Number of fractional digits (>= 1)

    Returns:
        Decimal string such as "3.1416"
    """
    if n_digits < 1:
        raise ValueError("n_digits must be positive")
    x = Constructible.coerce(x)
    factor = 10 ** n_digits
    exact = x.as_rational()
    if exact is not None:
        return _format_fixed(round(exact * factor), n_digits)

    bits = 64 + 4 * n_digits
    while True:
        enclosure = iv.enclose(x.tower, x.terms, bits)
        low = round(enclosure.lo * factor)
        high = round(enclosure.hi * factor)
        if low == high:
            return _format_fixed(low, n_digits)
        if high - low == 1:
            # An exact tie sits between the two candidates.
            tie = Fraction(2 * low + 1, 2)
            if x == tie / factor:
                return _format_fixed(round(tie), n_digits)
        bits *= 2
