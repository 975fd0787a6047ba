"""Construction scripts: parsing, elaboration into primitives and execution."""

from construction.elaborate import elaborate, elaborate_with_workspace
from construction.executor import Workspace, execute, execute_step
from construction.parser import evaluate_constant, parse, parse_expression
from construction.printer import format_program
from construction.program import Program
from construction.selectors import resolve_selector

__all__ = [
    "Program",
    "Workspace",
    "elaborate",
    "elaborate_with_workspace",
    "evaluate_constant",
    "execute",
    "execute_step",
    "format_program",
    "parse",
    "parse_expression",
    "resolve_selector",
]
