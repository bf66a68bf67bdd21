"""Utility helpers for trihex."""

from trihex.utils.config import Config, load_config
from trihex.utils.error_handler import (
    ConfigurationError,
    ConsistencyError,
    DocumentError,
    ErrorCategory,
    ErrorInfo,
    ErrorSeverity,
    ErrorTracker,
    LatticeError,
    SignatureError,
    TrihexError,
    VertexCountError,
)
from trihex.utils.logger import StructuredLogger, configure_logging, get_logger, log_execution_time

__all__ = [
    "Config",
    "load_config",
    "StructuredLogger",
    "configure_logging",
    "get_logger",
    "log_execution_time",
    "ErrorCategory",
    "ErrorSeverity",
    "ErrorInfo",
    "ErrorTracker",
    "TrihexError",
    "SignatureError",
    "VertexCountError",
    "LatticeError",
    "DocumentError",
    "ConfigurationError",
    "ConsistencyError",
]
