"""
Configuration management for Quadrature.
All settings live on the Config class with sensible defaults; the CLI
overrides them with flags.
"""

from typing import List


class Config:
    """Central configuration class."""

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Interval refinement schedule (bits)
    INTERVAL_START_BITS: int = 64
    INTERVAL_MAX_BITS: int = 1 << 16

    # Analysis
    METRICS_BITS: int = 128
    REPORT_DIGITS: int = 20
    DEFAULT_RATIO_DIGITS: int = 12

    # Floating replay (mpmath)
    REPLAY_BITS: int = 200
    REPLAY_TOLERANCE_BITS: int = 150

    # Rendering defaults
    CANVAS_SIZE: int = 800  # pixels
    CANVAS_MARGIN: int = 40  # pixels
    COORDINATE_PRECISION: int = 12
    STROKE_WIDTH: float = 1.5
    ACCENT_STROKE_WIDTH: float = 2.5
    POINT_RADIUS: float = 3.0
    LABEL_FONT_SIZE: int = 14
    HIGHLIGHT_FILL: str = "#ffe14d"
    STROKE_COLOR: str = "#222222"
    ACCENT_COLOR: str = "#c0392b"
    DIAMETER_COLOR: str = "#2e86de"

    @classmethod
    def validate(cls) -> List[str]:
        """Validate configuration; returns a list of problems (empty if valid)."""
        errors = []

        if cls.INTERVAL_START_BITS < 1:
            errors.append("INTERVAL_START_BITS must be positive")
        if cls.INTERVAL_MAX_BITS < cls.INTERVAL_START_BITS:
            errors.append("INTERVAL_MAX_BITS must be >= INTERVAL_START_BITS")
        if cls.COORDINATE_PRECISION < 6:
            errors.append("COORDINATE_PRECISION must be >= 6")
        if cls.CANVAS_SIZE <= 2 * cls.CANVAS_MARGIN:
            errors.append("CANVAS_SIZE must exceed twice CANVAS_MARGIN")
        if cls.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"Unknown LOG_LEVEL {cls.LOG_LEVEL!r}")

        return errors

    @classmethod
    def describe(cls) -> str:
        """Current configuration as a key: value block."""
        lines = [
            f"log_level: {cls.LOG_LEVEL}",
            f"interval_bits: {cls.INTERVAL_START_BITS}..{cls.INTERVAL_MAX_BITS}",
            f"metrics_bits: {cls.METRICS_BITS}",
            f"report_digits: {cls.REPORT_DIGITS}",
            f"replay_bits: {cls.REPLAY_BITS}",
            f"canvas: {cls.CANVAS_SIZE}px margin {cls.CANVAS_MARGIN}px",
            f"coordinate_precision: {cls.COORDINATE_PRECISION}",
        ]
        return "\n".join(lines)
