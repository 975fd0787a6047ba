"""
Render style and highlight settings.
"""

from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from config import Config
from utils.errors import RenderError


@dataclass(frozen=True)
class Highlight:
    """
    The shaded circle and square of a figure.

    circle is a circle name, "unit" (centred at the first unit point
    through the second) or "P:Q" (centred at P through Q); the square is
    erected on the right-hand side of square_side[0] -> square_side[1].
    """
    circle: Optional[str] = None
    square_side: Optional[Tuple[str, str]] = None


@dataclass(frozen=True)
class RenderStyle:
    canvas_size: int = Config.CANVAS_SIZE
    margin: int = Config.CANVAS_MARGIN
    precision: int = Config.COORDINATE_PRECISION
    stroke_width: float = Config.STROKE_WIDTH
    accent_stroke_width: float = Config.ACCENT_STROKE_WIDTH
    point_radius: float = Config.POINT_RADIUS
    label_font_size: int = Config.LABEL_FONT_SIZE
    highlight_fill: str = Config.HIGHLIGHT_FILL
    stroke_color: str = Config.STROKE_COLOR
    accent_color: str = Config.ACCENT_COLOR
    diameter_color: str = Config.DIAMETER_COLOR
    labels: bool = True

    def problems(self) -> List[str]:
        errors = []
        if self.canvas_size <= 0 or self.margin < 0:
            errors.append("canvas size must be positive and margin nonnegative")
        if self.canvas_size <= 2 * self.margin:
            errors.append("canvas size must exceed twice the margin")
        if self.precision < 6:
            errors.append("coordinate precision must be at least 6")
        if min(self.stroke_width, self.accent_stroke_width, self.point_radius) <= 0:
            errors.append("stroke widths and point radius must be positive")
        if self.label_font_size <= 0:
            errors.append("label font size must be positive")
        return errors

    def validate(self) -> "RenderStyle":
        """
        Raises:
            RenderError: listing every invalid setting
        """
        errors = self.problems()
        if errors:
            raise RenderError("; ".join(errors))
        return self

    def with_overrides(self, **overrides) -> "RenderStyle":
        """Copy with the given fields replaced; None values are ignored."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
