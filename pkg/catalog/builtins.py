"""
Built-in construction programs.

Each entry pairs a shipped .construct script with the exact lengths it is
meant to produce, the intermediate lengths of its correctness argument,
and the circle and square its figure shades.
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Tuple, Union

from construction.executor import Workspace, execute
from construction.parser import evaluate_constant, parse
from construction.program import Program
from field import Constructible
from geometry import distance
from render.style import Highlight
from utils.errors import CatalogError, ExecutionError

PROGRAM_DIR = Path(__file__).parent / "programs"
BUILTIN_PREFIX = "builtin:"

PHI = "(1+sqrt(5))/2"
SIX_FIFTHS_ONE_PLUS_PHI = f"sqrt(6/5*(1+{PHI}))"
NINE_PLACES = "sqrt(63/25*(1+5/2*(15*sqrt(5)-7)/269))"


@dataclass(frozen=True)
class Check:
    """Distance between two points (or its square) that must equal a target."""
    label: str
    p: str
    q: str
    target: str
    squared: bool = False

    def target_value(self) -> Constructible:
        return evaluate_constant(self.target)

    def measure(self, w: Workspace) -> Constructible:
        a, b = w.point(self.p), w.point(self.q)
        if self.squared:
            return (b - a).norm2()
        return distance(a, b)

    def holds(self, w: Workspace) -> bool:
        return self.measure(w) == self.target_value()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    results: Tuple[Check, ...]
    checks: Tuple[Check, ...]
    highlight: Highlight

    @property
    def path(self) -> Path:
        return PROGRAM_DIR / f"{self.name}.construct"

    def source(self) -> str:
        return self.path.read_text(encoding="utf-8")

    @property
    def program(self) -> Program:
        return _load_builtin(self.name)

    @property
    def result_points(self) -> Tuple[str, str]:
        """Endpoints of the main result."""
        return self.results[0].p, self.results[0].q

    @property
    def target(self) -> Constructible:
        return self.results[0].target_value()


def _lengths(*items: Tuple[str, str, str]) -> Tuple[Check, ...]:
    return tuple(Check(p + q, p, q, target) for p, q, target in items)


def _squares(*items: Tuple[str, str, str]) -> Tuple[Check, ...]:
    return tuple(Check(f"{p}{q}^2", p, q, target, squared=True) for p, q, target in items)


_LEFT_RESULTS = _lengths(
    ("E", "F", "sqrt(63)/5"),
    ("N", "O", "sqrt(15*sqrt(5)-7)/5"),
)
_LEFT_CHECKS = _lengths(
    ("B", "F", "1/5"),
    ("B", "G", "3/5"),
    ("D", "G", "sqrt(7)/5"),
    ("C", "H", "sqrt(5)"),
    ("C", "I", "3/sqrt(5)"),
    ("I", "K", "1"),
    ("L", "I", "sqrt(3/sqrt(5))"),
    ("I", "M", "sqrt(3/sqrt(5))"),
)
_RIGHT_RESULTS = _lengths(("P", "U", "sqrt(269)/8"))
_RIGHT_CHECKS = _squares(
    ("R", "S", "13/4"),
    ("P", "S", "61/16"),
    ("T", "P", "61/64"),
    ("T", "U", "13/4"),
)

CATALOG: Dict[str, CatalogEntry] = {
    e.name: e for e in (
        CatalogEntry(
            name="dixon-phi",
            description="Dixon's square of side sqrt(6/5 (1 + phi)), seven steps",
            results=_lengths(("F", "K", SIX_FIFTHS_ONE_PLUS_PHI)),
            checks=_lengths(
                ("C", "E", "sqrt(5)/2"),
                ("D", "F", PHI),
                ("A", "F", f"1+{PHI}"),
                ("H", "F", "1"),
                ("G", "F", f"3*(1+{PHI})/10"),
                ("F", "I", f"sqrt(3*(1+{PHI})/10)"),
            ),
            highlight=Highlight("A:B", ("F", "K")),
        ),
        CatalogEntry(
            name="chu-phi",
            description="square of side sqrt(6/5 (1 + phi)) in six steps",
            results=_lengths(("M", "H", SIX_FIFTHS_ONE_PLUS_PHI)),
            checks=_lengths(
                ("B", "C", "2"),
                ("A", "D", "sqrt(5)"),
                ("D", "M", "2/sqrt(5)"),
                ("M", "A", "3/sqrt(5)"),
                ("M", "N", "3/sqrt(5)"),
                ("M", "B", "3/sqrt(5)+1"),
            ),
            highlight=Highlight("B:A", ("M", "H")),
        ),
        CatalogEntry(
            name="chu9-left",
            description="lengths EF = sqrt(63)/5 and NO = sqrt(15 sqrt(5) - 7)/5",
            results=_LEFT_RESULTS,
            checks=_LEFT_CHECKS,
            highlight=Highlight("unit", ("E", "F")),
        ),
        CatalogEntry(
            name="chu9-right",
            description="length PU = sqrt(269)/8",
            results=_RIGHT_RESULTS,
            checks=_RIGHT_CHECKS,
            highlight=Highlight("unit", ("P", "U")),
        ),
        CatalogEntry(
            name="chu9-full",
            description="square correct to nine decimal places of pi",
            results=_lengths(("A", "Z", NINE_PLACES)),
            checks=_LEFT_RESULTS + _LEFT_CHECKS + _RIGHT_RESULTS + _RIGHT_CHECKS,
            highlight=Highlight("unit", ("A", "Z")),
        ),
    )
}


@lru_cache(maxsize=None)
def _load_builtin(name: str) -> Program:
    path = PROGRAM_DIR / f"{name}.construct"
    return parse(path.read_text(encoding="utf-8"), name)


def list_builtins() -> List[str]:
    return list(CATALOG)


def builtin(name: str) -> CatalogEntry:
    """
    Raises:
        CatalogError: unknown builtin name
    """
    try:
        return CATALOG[name]
    except KeyError:
        known = ", ".join(CATALOG)
        raise CatalogError(f"unknown builtin `{name}` (known: {known})") from None


def builtin_program(name: str) -> Program:
    """The parsed program of a built-in entry."""
    return builtin(name).program


def load(reference: str) -> Program:
    """
    Load `builtin:NAME` or a .construct file path.

    Raises:
        CatalogError: unknown builtin or unreadable file
        ParseError: the script does not parse
    """
    if reference.startswith(BUILTIN_PREFIX):
        return builtin_program(reference[len(BUILTIN_PREFIX):])
    path = Path(reference)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CatalogError(f"cannot read `{reference}`: {e.strerror}") from None
    return parse(text, path.stem)


def verify(program: Program, endpoints: Tuple[str, str],
           target: Union[str, Constructible]) -> bool:
    """
    Whether the distance between two points of the program equals target exactly.

    Args:
        program: Program to execute
        endpoints: Names of the two points
        target: Constructible value or an expression over rationals and sqrt

    Raises:
        ExecutionError: an endpoint is not a point of the program
        ParseError: the target expression does not parse
    """
    if isinstance(target, str):
        target = evaluate_constant(target)
    w = execute(program)
    p, q = endpoints
    for name in endpoints:
        if name not in w:
            raise ExecutionError(name, "unknown name")
    return distance(w.point(p), w.point(q)) == target


def check_entry(catalog_entry: CatalogEntry, w: Workspace = None) -> List[Tuple[Check, bool]]:
    """Evaluate every result and intermediate check of an entry."""
    if w is None:
        w = execute(catalog_entry.program)
    return [(check, check.holds(w)) for check in catalog_entry.results + catalog_entry.checks]
