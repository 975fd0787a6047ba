"""
Named constructible approximations of pi.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

from construction.parser import evaluate_constant
from field import Constructible
from utils.errors import CatalogError


@dataclass(frozen=True)
class Approximant:
    name: str
    expression: str
    claimed_decimal_places: int
    source: str

    @property
    def value(self) -> Constructible:
        return _value(self.expression)


@lru_cache(maxsize=None)
def _value(expression: str) -> Constructible:
    return evaluate_constant(expression)


APPROXIMANTS: Dict[str, Approximant] = {
    a.name: a for a in (
        Approximant("zu-355-113", "355/113", 6, "Zu Chongzhi, fifth century"),
        Approximant("ramanujan-quartic", "sqrt(sqrt(2143/22))", 8,
                    "Ramanujan, fourth root of 9^2 + 19^2/22"),
        Approximant("dixon-phi-value", "6/5*(1+(1+sqrt(5))/2)", 3,
                    "Dixon, golden-ratio square, builtin:dixon-phi"),
        Approximant("chu9-value", "63/25*(1+5/2*(15*sqrt(5)-7)/269)", 9,
                    "nine-place square, builtin:chu9-full"),
    )
}


def list_approximants() -> List[str]:
    return list(APPROXIMANTS)


def approximant(name: str) -> Approximant:
    """
    Raises:
        CatalogError: unknown approximant name
    """
    try:
        return APPROXIMANTS[name]
    except KeyError:
        known = ", ".join(APPROXIMANTS)
        raise CatalogError(f"unknown approximant `{name}` (known: {known})") from None
