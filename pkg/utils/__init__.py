"""Utility modules for Quadrature."""

from utils.errors import (
    AnalysisError, CatalogError, ExecutionError, FieldError, GeometryError,
    InternalDefect, ParseError, QuadratureError, RenderError,
)
from utils.logger import logger, setup_logger, log_error

__all__ = [
    'logger',
    'setup_logger',
    'log_error',
    'QuadratureError',
    'FieldError',
    'GeometryError',
    'ParseError',
    'ExecutionError',
    'CatalogError',
    'RenderError',
    'InternalDefect',
    'AnalysisError',
]
