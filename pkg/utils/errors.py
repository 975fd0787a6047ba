"""
Exception hierarchy for Quadrature.

Every error carries a short `kind` used by the CLI error line
(`error: <kind>: <detail>`).
"""

from typing import Optional, Tuple


class QuadratureError(Exception):
    """Base class for all library errors."""

    kind = "error"


class FieldError(QuadratureError, ArithmeticError):
    """Exact arithmetic failure: division by zero or negative radicand."""

    kind = "field"


class GeometryError(QuadratureError, ValueError):
    """Degenerate geometric input."""

    kind = "geometry"


class ParseError(QuadratureError, ValueError):
    """Syntax or static-check error in a construction script."""

    kind = "parse"

    def __init__(self, message: str, location: Optional[Tuple[int, int]] = None):
        self.message = message
        self.location = location
        if location is not None:
            message = f"line {location[0]}, column {location[1]}: {message}"
        super().__init__(message)


class ExecutionError(QuadratureError):
    """Failure while executing a construction step."""

    kind = "execution"

    def __init__(self, step: str, message: str):
        self.step = step
        self.message = message
        super().__init__(f"step {step}: {message}")


class CatalogError(QuadratureError, KeyError):
    """Unknown builtin program or approximant."""

    kind = "catalog"

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown catalog name"


class RenderError(QuadratureError, ValueError):
    """Invalid render request or style."""

    kind = "render"


class InternalDefect(QuadratureError, RuntimeError):
    """An invariant that cannot fail for correct inputs was violated."""

    kind = "internal"


class AnalysisError(QuadratureError, ValueError):
    """Invalid input to a measurement (for example a nonpositive value)."""

    kind = "analysis"
