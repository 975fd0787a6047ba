"""
Reference value of pi for error reports.

Chudnovsky series summed by integer binary splitting. pi is not
constructible and never enters a construction; it only appears here as an
enclosing interval of requested width.
"""

from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, isqrt
from typing import Tuple

from field.interval import Interval

# 640320^3 / 24
_C3_OVER_24 = 10939058860032000


def binary_split(a: int, b: int) -> Tuple[int, int, int]:
    """
    P(a, b), Q(a, b), T(a, b) of the Chudnovsky series, so that the first
    N terms give pi ~ Q(0, N) * 426880 * sqrt(10005) / T(0, N).
    """
    if b - a == 1:
        if a == 0:
            return 1, 1, 13591409
        k = a
        p = (6 * k - 5) * (2 * k - 1) * (6 * k - 1)
        q = k * k * k * _C3_OVER_24
        t = (13591409 + 545140134 * k) * p
        return p, q, -t if k % 2 else t
    m = (a + b) // 2
    p1, q1, t1 = binary_split(a, m)
    p2, q2, t2 = binary_split(m, b)
    return p1 * p2, q1 * q2, q2 * t1 + p1 * t2


@lru_cache(maxsize=64)
def pi_interval(bits: int) -> Interval:
    """
    Interval containing pi of width at most 2^-bits.

    With N >= 2 terms the series tail changes pi by a relative amount
    below 10^(-13 N); the square root is bracketed with isqrt.
    """
    terms = max(2, ceil((bits + 8) * 0.30103 / 13) + 1)
    _, q, t = binary_split(0, terms)
    work = bits + 16
    root = isqrt(10005 << (2 * work))
    scale = Fraction(q * 426880, t << work)
    lo, hi = scale * root, scale * (root + 1)
    tail = Fraction(1, 10 ** (13 * terms))
    lo, hi = lo * (1 - tail), hi * (1 + tail)
    return Interval(lo, hi, bits).rounded_out(bits + 2)


def pi_decimal(n_digits: int, truncate: bool = False) -> str:
    """pi with n_digits fractional digits, rounded half-even or truncated."""
    factor = 10 ** n_digits
    bits = int(n_digits * 3.33) + 16
    while True:
        enclosure = pi_interval(bits)
        if truncate:
            low = floor(enclosure.lo * factor)
            high = floor(enclosure.hi * factor)
        else:
            low = round(enclosure.lo * factor)
            high = round(enclosure.hi * factor)
        if low == high:
            digits = str(low)
            return f"{digits[:-n_digits]}.{digits[-n_digits:]}"
        bits *= 2
