"""
Dyadic interval enclosures of tower elements.

Intervals only ever certify nonzero signs and drive decimal output; zero
is decided structurally (an element is zero iff it has no terms).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, ceil, isqrt

from config import Config
from field import tower as tw
from utils.errors import InternalDefect
from utils.logger import log_refinement


def _floor_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(floor(x * (1 << bits)), 1 << bits)


def _ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(ceil(x * (1 << bits)), 1 << bits)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with dyadic endpoints."""
    lo: Fraction
    hi: Fraction
    precision_bits: int = 0

    @classmethod
    def exact(cls, value: Fraction, bits: int = 0) -> "Interval":
        return cls(Fraction(value), Fraction(value), bits)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def magnitude(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi, self.precision_bits)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.precision_bits)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo, self.lo * other.hi,
            self.hi * other.lo, self.hi * other.hi,
        )
        return Interval(min(products), max(products), self.precision_bits)

    def scaled(self, k: Fraction) -> "Interval":
        a, b = self.lo * k, self.hi * k
        return Interval(min(a, b), max(a, b), self.precision_bits)

    def rounded_out(self, bits: int) -> "Interval":
        return Interval(_floor_dyadic(self.lo, bits), _ceil_dyadic(self.hi, bits), bits)

    def sqrt(self, bits: int) -> "Interval":
        """Enclosure of the square root; negative parts are clamped to 0."""
        scale_sq = 1 << (2 * bits)
        lo = max(self.lo, Fraction(0))
        hi = max(self.hi, Fraction(0))
        root_lo = isqrt(floor(lo * scale_sq))
        hi_scaled = ceil(hi * scale_sq)
        root_hi = isqrt(hi_scaled)
        if root_hi * root_hi < hi_scaled:
            root_hi += 1
        return Interval(Fraction(root_lo, 1 << bits), Fraction(root_hi, 1 << bits), bits)

    def __str__(self) -> str:
        return f"[{float(self.lo)!r}, {float(self.hi)!r}]"


@lru_cache(maxsize=65536)
def _generator_interval(tower: tw.Tower, i: int, bits: int) -> Interval:
    radicand = evaluate(tower, tower[i], bits + 8)
    return radicand.sqrt(bits + 4)


@lru_cache(maxsize=65536)
def evaluate(tower: tw.Tower, terms: tw.Terms, bits: int) -> Interval:
    """One pass of interval evaluation at working precision `bits`."""
    total = Interval.exact(Fraction(0), bits)
    for mask, coeff in terms:
        part = Interval.exact(coeff, bits)
        i = 0
        m = mask
        while m:
            if m & 1:
                part = (part * _generator_interval(tower, i, bits)).rounded_out(bits + 4)
            m >>= 1
            i += 1
        total = total + part
    return total.rounded_out(bits)


def enclose(tower: tw.Tower, terms: tw.Terms, precision_bits: int) -> Interval:
    """
    Interval of width at most 2^(1 - precision_bits) * max(1, |value|).

    Working precision grows until the width target is met.
    """
    if len(terms) == 1 and terms[0][0] == 0:
        value = terms[0][1]
        return Interval(_floor_dyadic(value, precision_bits + 1),
                        _ceil_dyadic(value, precision_bits + 1), precision_bits)
    if not terms:
        return Interval.exact(Fraction(0), precision_bits)
    work = precision_bits + 16
    while True:
        result = evaluate(tower, terms, work)
        bound = Fraction(2) ** (1 - precision_bits) * max(Fraction(1), result.magnitude())
        if result.width <= bound:
            return Interval(result.lo, result.hi, precision_bits)
        if work > 4 * Config.INTERVAL_MAX_BITS:
            raise InternalDefect(f"interval evaluation did not converge at {work} bits")
        work *= 2
        log_refinement(work, "width target not met")


def sign_of(tower: tw.Tower, terms: tw.Terms) -> int:
    """Exact sign: zero structurally, nonzero by refinement."""
    if not terms:
        return 0
    if len(terms) == 1 and terms[0][0] == 0:
        return 1 if terms[0][1] > 0 else -1
    bits = Config.INTERVAL_START_BITS
    while bits <= Config.INTERVAL_MAX_BITS:
        enclosure = enclose(tower, terms, bits)
        if enclosure.lo > 0:
            return 1
        if enclosure.hi < 0:
            return -1
        bits *= 2
        log_refinement(bits, "sign undecided")
    raise InternalDefect("sign refinement exceeded the bit cap for a nonzero value")
