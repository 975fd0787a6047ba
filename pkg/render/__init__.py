"""SVG figures of executed constructions."""

from render.style import Highlight, RenderStyle
from render.svg import SvgRenderer, render

__all__ = ["Highlight", "RenderStyle", "SvgRenderer", "render"]
