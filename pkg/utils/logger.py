"""
Logging configuration for Quadrature.
"""

import logging
import sys

from config import Config


def setup_logger(name: str = "quadrature", level: str = None) -> logging.Logger:
    """
    Set up and return a configured logger.

    Args:
        name: Logger name
        level: Level name overriding Config.LOG_LEVEL

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    level_value = getattr(logging, (level or Config.LOG_LEVEL).upper(), logging.WARNING)
    logger.setLevel(level_value)

    # Prevent duplicate handlers
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level_value)
        return logger

    # stdout carries command output, so diagnostics go to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level_value)

    formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)-8s | %(name)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)
    logger.propagate = False

    return logger


# Create default logger instance
logger = setup_logger()


def log_step(program: str, step: str, detail: str = "") -> None:
    """Log an executed construction step (DEBUG to avoid spam)."""
    logger.debug(f"Step [{program}] {step}: {detail}")


def log_refinement(bits: int, reason: str) -> None:
    """Log an interval refinement round."""
    logger.debug(f"Refine to {bits} bits: {reason}")


def log_error(context: str, error: Exception) -> None:
    """Log errors with context."""
    logger.error(f"Error in {context}: {str(error)}")
