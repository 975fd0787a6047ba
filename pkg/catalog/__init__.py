"""Built-in construction programs and pi approximants."""

from catalog.approximants import Approximant, approximant, list_approximants
from catalog.builtins import (
    CatalogEntry, Check, builtin, builtin_program, check_entry, list_builtins,
    load, verify,
)
from render.style import Highlight

__all__ = [
    "Approximant",
    "CatalogEntry",
    "Check",
    "Highlight",
    "approximant",
    "builtin",
    "builtin_program",
    "check_entry",
    "list_approximants",
    "list_builtins",
    "load",
    "verify",
]
