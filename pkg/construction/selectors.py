"""
Choosing one intersection candidate with a selector.
"""

from typing import List, Mapping, Optional

from construction.program import Far, Index, Near, OppositeSide, SameSide, Selector
from geometry import Line, Point
from utils.errors import ExecutionError


def _extreme(candidates: List[Point], anchor: Point, want: int, step: str) -> Point:
    if len(candidates) == 1:
        return candidates[0]
    d0 = (candidates[0] - anchor).norm2()
    d1 = (candidates[1] - anchor).norm2()
    s = (d1 - d0).sign()
    if s == 0:
        raise ExecutionError(step, "selector ambiguous: both candidates are equidistant")
    # want = -1 picks the nearer candidate, +1 the farther one
    return candidates[1] if s == want else candidates[0]


def _by_side(candidates: List[Point], line: Line, anchor: Point, opposite: bool,
             step: str) -> Point:
    reference = line.side(anchor)
    if reference == 0:
        raise ExecutionError(step, "selector point lies on the selector line")
    wanted = -reference if opposite else reference
    matches = [c for c in candidates if line.side(c) == wanted]
    if not matches:
        raise ExecutionError(step, "selector empty: no candidate on the requested side")
    if len(matches) > 1:
        raise ExecutionError(step, "selector ambiguous: both candidates on the requested side")
    return matches[0]


def resolve_selector(candidates: List[Point], selector: Optional[Selector],
                     bindings: Mapping[str, object], step: str = "?") -> Point:
    """
    The unique candidate satisfying the selector.

    Args:
        candidates: Ordered intersection points
        selector: Disambiguation rule, or None when one candidate is expected
        bindings: Workspace bindings for the selector's names
        step: Step name used in error messages

    Raises:
        ExecutionError: empty candidate list, ambiguous or empty selection
    """
    if not candidates:
        raise ExecutionError(step, "objects do not intersect")
    if selector is None:
        if len(candidates) > 1:
            raise ExecutionError(step, "selector ambiguous: two candidates and no selector")
        return candidates[0]
    if isinstance(selector, Index):
        if selector.index >= len(candidates):
            raise ExecutionError(step, f"selector empty: no candidate idx {selector.index}")
        return candidates[selector.index]
    if isinstance(selector, Near):
        return _extreme(candidates, bindings[selector.point], -1, step)
    if isinstance(selector, Far):
        return _extreme(candidates, bindings[selector.point], 1, step)
    if isinstance(selector, (SameSide, OppositeSide)):
        return _by_side(candidates, bindings[selector.line], bindings[selector.point],
                        isinstance(selector, OppositeSide), step)
    raise ExecutionError(step, f"unknown selector {selector!r}")


def index_of(candidates: List[Point], chosen: Point) -> int:
    for i, candidate in enumerate(candidates):
        if candidate == chosen:
            return i
    raise ExecutionError("?", "chosen point is not a candidate")
