"""
Efficiency metrics of a construction.

A construction is efficient when it takes few compass and ruler steps and
never draws huge or tiny lengths along the way. Steps are counted after
elaboration, and every drawn segment, circle radius and compass transfer
of the elaborated trace is surveyed.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config import Config
from construction.elaborate import elaborate_with_workspace
from construction.executor import Workspace
from construction.program import (
    Dist, DrawCircle, DrawLine, OnRay, Program, is_alias,
)
from field import Constructible, approx_interval, to_decimal
from geometry import Point, distance
from utils.logger import logger


@dataclass
class MetricsReport:
    """Step counts and length extremes of one program."""
    primitive_steps: int
    macro_steps: int
    max_length: Optional[str]
    min_positive_length: Optional[str]
    distinct_points: int
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "type": "metrics",
            "primitive_steps": self.primitive_steps,
            "macro_steps": self.macro_steps,
            "max_length": self.max_length,
            "min_positive_length": self.min_positive_length,
            "distinct_points": self.distinct_points,
            "warnings": list(self.warnings),
        }


def surveyed_lengths(program: Program, w: Workspace) -> List[Constructible]:
    """Drawn segment lengths, circle radii and transfer lengths of a primitive program."""
    lengths = []
    for step in program.steps:
        if isinstance(step, DrawLine):
            lengths.append(distance(w.point(step.p), w.point(step.q)))
        elif isinstance(step, DrawCircle):
            lengths.append(distance(w.point(step.center), w.point(step.through)))
        elif isinstance(step, OnRay) and isinstance(step.length, Dist):
            lengths.append(distance(w.point(step.length.a), w.point(step.length.b)))
    return lengths


def _key(p: Point, bits: int) -> Tuple:
    # approx_interval depends only on the value, so equal points share a key
    return approx_interval(p.x, bits).lo, approx_interval(p.y, bits).lo


def count_distinct_points(w: Workspace) -> int:
    buckets: Dict[Tuple, List[Point]] = {}
    for _, point in w.points():
        bucket = buckets.setdefault(_key(point, 64), [])
        if not any(point == other for other in bucket):
            bucket.append(point)
    return sum(len(bucket) for bucket in buckets.values())


def metrics(program: Program, warn_above=None, warn_below=None) -> MetricsReport:
    """
    Measure a program.

    Args:
        program: Surface program; it is elaborated and executed here
        warn_above: Optional length; a warning is added when max_length exceeds it
        warn_below: Optional length; a warning is added when min_positive_length is below it

    Returns:
        MetricsReport with lengths as decimal strings (Config.REPORT_DIGITS digits)
    """
    elaborated, w = elaborate_with_workspace(program)
    primitive_steps = sum(1 for step in elaborated.steps if not is_alias(step))

    bits = Config.METRICS_BITS
    positive = [(approx_interval(v, bits), v) for v in surveyed_lengths(elaborated, w)
                if not v.is_zero()]
    largest = smallest = None
    if positive:
        largest = max(positive, key=lambda item: item[0].lo)[1]
        smallest = min(positive, key=lambda item: item[0].lo)[1]

    digits = Config.REPORT_DIGITS
    report = MetricsReport(
        primitive_steps=primitive_steps,
        macro_steps=program.construction_steps(),
        max_length=to_decimal(largest, digits) if largest is not None else None,
        min_positive_length=to_decimal(smallest, digits) if smallest is not None else None,
        distinct_points=count_distinct_points(w),
    )

    if warn_above is not None and largest is not None and largest > warn_above:
        report.warnings.append(f"max_length {report.max_length} exceeds {warn_above}")
    if warn_below is not None and smallest is not None and smallest < warn_below:
        report.warnings.append(f"min_positive_length {report.min_positive_length} "
                               f"is below {warn_below}")
    for message in report.warnings:
        logger.warning(f"[{program.name}] {message}")

    return report
