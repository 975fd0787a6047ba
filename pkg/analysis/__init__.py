"""Efficiency metrics, pi error reports and floating replay."""

from analysis.metrics import MetricsReport, metrics
from analysis.pi_error import ErrorReport, pi_error, places_correct, truncated_decimal
from analysis.pi_oracle import pi_decimal, pi_interval
from analysis.replay import ReplayReport, float_replay

__all__ = [
    "ErrorReport",
    "MetricsReport",
    "ReplayReport",
    "float_replay",
    "metrics",
    "pi_decimal",
    "pi_error",
    "pi_interval",
    "places_correct",
    "truncated_decimal",
]
