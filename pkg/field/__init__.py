"""Exact constructible-number field."""

from field.constructible import (
    Constructible,
    ONE,
    ZERO,
    approx_interval,
    arith,
    equals,
    from_rational,
    sign,
    sqrt,
    to_decimal,
)
from field.interval import Interval

__all__ = [
    "Constructible",
    "Interval",
    "ONE",
    "ZERO",
    "approx_interval",
    "arith",
    "equals",
    "from_rational",
    "sign",
    "sqrt",
    "to_decimal",
]
