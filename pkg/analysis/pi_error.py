"""
How well a value approximates pi: ratio to pi and correct decimal places.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, trunc
from typing import Callable, Tuple

from analysis.pi_oracle import pi_interval
from config import Config
from field import Constructible, approx_interval, to_decimal
from utils.errors import AnalysisError
from utils.logger import log_refinement

MAX_PLACES = 200


def _ratio_bounds(v: Constructible, bits: int) -> Tuple[Fraction, Fraction]:
    value = approx_interval(v, bits)
    pi = pi_interval(bits)
    return value.lo / pi.hi, value.hi / pi.lo


def _scaled_ratio(v: Constructible, scale: int, shift: Fraction,
                  to_int: Callable[[Fraction], int]) -> int:
    """to_int((v / pi - shift) * scale), refining until both bounds agree."""
    bits = scale.bit_length() + 64
    while True:
        lo, hi = _ratio_bounds(v, bits)
        low = to_int((lo - shift) * scale)
        if low == to_int((hi - shift) * scale):
            return low
        log_refinement(bits * 2, "ratio to pi straddles a digit boundary")
        bits *= 2


def _truncated(v: Constructible, k: int) -> int:
    """floor(v * 10^k), exactly."""
    factor = 10 ** k
    exact = v.as_rational()
    if exact is not None:
        return floor(exact * factor)
    bits = factor.bit_length() + 64
    while True:
        enclosure = approx_interval(v, bits)
        low = floor(enclosure.lo * factor)
        if low == floor(enclosure.hi * factor):
            return low
        bits *= 2


def _truncated_pi(k: int) -> int:
    factor = 10 ** k
    bits = factor.bit_length() + 64
    while True:
        enclosure = pi_interval(bits)
        low = floor(enclosure.lo * factor)
        if low == floor(enclosure.hi * factor):
            return low
        bits *= 2


def truncated_decimal(v, n_digits: int) -> str:
    """v cut (not rounded) after n_digits fractional digits; v must be nonnegative."""
    v = Constructible.coerce(v)
    if v.sign() < 0:
        raise AnalysisError("truncated decimals need a nonnegative value")
    return _format_scaled(_truncated(v, n_digits), n_digits)


def places_correct(v) -> int:
    """Leading fractional digits of v that match pi when both are truncated."""
    v = Constructible.coerce(v)
    if _truncated(v, 0) != _truncated_pi(0):
        return 0
    k = 0
    while k < MAX_PLACES and _truncated(v, k + 1) == _truncated_pi(k + 1):
        k += 1
    return k


def _format_scaled(scaled: int, digits: int) -> str:
    text = str(abs(scaled)).rjust(digits + 1, "0")
    sign = "-" if scaled < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


@dataclass
class ErrorReport:
    """Digit accuracy and ratio to pi of one value."""
    ratio_to_pi: str
    places_correct: int
    value_decimal: str
    ratio_digits: int
    truncated: bool = True
    value: Constructible = field(default=None, repr=False, compare=False)

    def parts_off(self, exponent: int) -> int:
        """
        Deviation from pi in parts per 10^exponent, truncated toward zero.

        6/5 (1 + phi) is 15 parts per million off.
        """
        return _scaled_ratio(self.value, 10 ** exponent, Fraction(1), trunc)

    def to_dict(self) -> dict:
        return {
            "type": "error",
            "ratio_to_pi": self.ratio_to_pi,
            "places_correct": self.places_correct,
            "value_decimal": self.value_decimal,
            "ratio_digits": self.ratio_digits,
            "truncated": self.truncated,
        }


def pi_error(v, ratio_digits: int = None, truncate: bool = True) -> ErrorReport:
    """
    Compare a positive value with pi.

    Args:
        v: Constructible (or rational) approximation of pi
        ratio_digits: Fractional digits of the reported ratio
        truncate: Cut the ratio after ratio_digits (the default) instead of rounding half-even

    Returns:
        ErrorReport; value_decimal carries as many digits as the ratio

    Raises:
        AnalysisError: if v is not positive
    """
    v = Constructible.coerce(v)
    digits = ratio_digits if ratio_digits is not None else Config.DEFAULT_RATIO_DIGITS
    if digits < 1:
        raise AnalysisError("ratio digits must be positive")
    if v.sign() <= 0:
        raise AnalysisError("pi_error needs a positive value")
    ratio = _scaled_ratio(v, 10 ** digits, Fraction(0), floor if truncate else round)
    return ErrorReport(
        ratio_to_pi=_format_scaled(ratio, digits),
        places_correct=places_correct(v),
        value_decimal=to_decimal(v, digits),
        ratio_digits=digits,
        truncated=truncate,
        value=v,
    )
