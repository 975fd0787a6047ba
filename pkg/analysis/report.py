"""
Report formatting.
Creates the key: value text blocks and JSON documents printed by the CLI.
"""

import json
from typing import List, Optional

from config import Config
from construction.executor import Workspace
from construction.program import Divide, Intersect, Program, is_macro
from field import Constructible, to_decimal
from geometry import Circle, Line, Point


def format_value(value) -> str:
    """Format one report field for the text block."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value) if value else "none"
    return str(value)


def format_decimal(value: Constructible, digits: Optional[int] = None) -> str:
    return to_decimal(value, digits or Config.REPORT_DIGITS)


def format_point(point: Point, digits: Optional[int] = None) -> str:
    return f"({format_decimal(point.x, digits)}, {format_decimal(point.y, digits)})"


def format_text(report) -> str:
    """
    Format any report with a to_dict() as a key: value block.

    The `type` key is left out; field order follows the report.
    """
    lines = [
        f"{key}: {format_value(value)}"
        for key, value in report.to_dict().items()
        if key != "type"
    ]
    return "\n".join(lines)


def format_json(report) -> str:
    """Format a report as a JSON document, keys in declaration order."""
    return json.dumps(report.to_dict(), indent=2)


def format_binding(name: str, value, digits: Optional[int] = None) -> str:
    if isinstance(value, Point):
        return f"point {name} = {format_point(value, digits)}"
    if isinstance(value, Line):
        return f"line {name} through {format_point(value.p0, digits)} {format_point(value.p1, digits)}"
    if isinstance(value, Circle):
        return (f"circle {name} center {format_point(value.center, digits)} "
                f"radius {format_decimal(value.radius(), digits)}")
    return f"len {name} = {format_decimal(value, digits)}"


def format_workspace(w: Workspace, program: Program, digits: Optional[int] = None) -> str:
    """
    Format the result of `run`: every user binding, then a trace summary.

    Args:
        w: Executed workspace
        program: The program that produced it
        digits: Fractional digits of every decimal (default Config.REPORT_DIGITS)

    Returns:
        Multi-line text
    """
    lines: List[str] = [f"# {program.name}"]
    for name, value in w.bindings.items():
        lines.append(format_binding(name, value, digits))

    intersections = sum(1 for step in w.trace if isinstance(step, Intersect))
    macros = sum(1 for step in w.trace if is_macro(step))
    divided = sum(len(step.names) for step in w.trace if isinstance(step, Divide))
    lines.append("")
    lines.append(f"steps: {len(w.trace)}")
    lines.append(f"macro_steps: {macros}")
    lines.append(f"intersections: {intersections}")
    lines.append(f"division_points: {divided}")
    if w.unit is not None:
        lines.append(f"unit: {w.unit[0]} {w.unit[1]}")
    return "\n".join(lines)
