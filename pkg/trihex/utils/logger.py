"""
Structured logging utilities for trihex.

JSON-formatted records for files alongside a readable console formatter.
Everything goes to stderr: stdout is reserved for command output.
"""

from __future__ import annotations

import json
import logging
import sys
import time
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from datetime import datetime, timezone
from functools import wraps
from typing import Any, Dict, Iterator, Optional

RUN_ID: ContextVar[Optional[str]] = ContextVar("trihex_run_id", default=None)


class JsonFormatter(logging.Formatter):
    """Emit structured log records as JSON lines."""

    def format(self, record: logging.LogRecord) -> str:
        if isinstance(record.msg, dict):
            payload = record.msg.copy()
        else:
            payload = {
                "message": record.getMessage(),
            }

        payload.update(
            {
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "level": record.levelname,
                "service": "trihex",
                "logger": record.name,
            }
        )

        run_id = RUN_ID.get()
        if run_id:
            payload.setdefault("run_id", run_id)

        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)

        extra_fields = getattr(record, "extra_fields", None)
        if isinstance(extra_fields, dict):
            payload.update(extra_fields)

        return json.dumps(payload, default=str)


class ConsoleFormatter(logging.Formatter):
    """Human friendly console output with lightweight colouring."""

    _COLOURS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
        "RESET": "\033[0m",
    }

    def __init__(self, colour: bool = True) -> None:
        super().__init__()
        self.colour = colour

    def format(self, record: logging.LogRecord) -> str:
        if self.colour:
            colour = self._COLOURS.get(record.levelname, self._COLOURS["RESET"])
            reset = self._COLOURS["RESET"]
        else:
            colour = reset = ""
        timestamp = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S")
        level = f"{colour}{record.levelname:8s}{reset}"
        logger_name = f"{record.name:24s}"
        message = record.getMessage()

        extra_fields = getattr(record, "extra_fields", None)
        if isinstance(extra_fields, dict) and extra_fields:
            rendered = " ".join(f"{key}={value}" for key, value in extra_fields.items())
            message = f"{message} ({rendered})"

        run_id = RUN_ID.get()
        if run_id:
            message = f"[{run_id[:8]}] {message}"

        formatted = f"{timestamp} | {level} | {logger_name} | {message}"

        if record.exc_info:
            formatted += "\n" + self.formatException(record.exc_info)

        return formatted


_SETTINGS: Dict[str, Any] = {"level": "WARNING", "fmt": "console", "logfile": None}
_LOGGERS: Dict[str, "StructuredLogger"] = {}


class StructuredLogger:
    """
    Wrapper around the standard logging module with keyword-field helpers
    and a run-scoped correlation id.
    """

    def __init__(
        self,
        name: str,
        log_level: str = "WARNING",
        logfile: Optional[str] = None,
        fmt: str = "console",
    ) -> None:
        self.logger = logging.getLogger(name)
        self.configure(log_level, logfile=logfile, fmt=fmt)
        self.logger.propagate = False

    def configure(self, log_level: str, *, logfile: Optional[str] = None, fmt: str = "console") -> None:
        self.logger.setLevel(getattr(logging, log_level.upper(), logging.WARNING))
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        stream_handler = logging.StreamHandler(sys.stderr)
        if fmt == "json":
            stream_handler.setFormatter(JsonFormatter())
        else:
            stream_handler.setFormatter(ConsoleFormatter(colour=sys.stderr.isatty()))
        self.logger.addHandler(stream_handler)

        if logfile:
            file_handler = logging.FileHandler(logfile)
            file_handler.setFormatter(JsonFormatter())
            self.logger.addHandler(file_handler)

    # ----------------------------------------------------------------- contexts
    @contextmanager
    def run_context(self, run_id: Optional[str] = None) -> Iterator[str]:
        """Context manager that sets a run id for correlated logging."""
        token = RUN_ID.set(run_id or uuid.uuid4().hex)
        try:
            yield RUN_ID.get() or ""
        finally:
            RUN_ID.reset(token)

    # ----------------------------------------------------------------- logging
    def _handle(self, level: int, message: str, **extra: Any) -> None:
        if not self.logger.isEnabledFor(level):
            return
        record = self.logger.makeRecord(
            name=self.logger.name,
            level=level,
            fn="",
            lno=0,
            msg=message,
            args=(),
            exc_info=extra.pop("exc_info", None),
        )
        if extra:
            record.extra_fields = extra
        self.logger.handle(record)

    def debug(self, message: str, **extra: Any) -> None:
        self._handle(logging.DEBUG, message, **extra)

    def info(self, message: str, **extra: Any) -> None:
        self._handle(logging.INFO, message, **extra)

    def warning(self, message: str, **extra: Any) -> None:
        self._handle(logging.WARNING, message, **extra)

    def error(self, message: str, **extra: Any) -> None:
        exc_info = extra.pop("exc_info", None)
        self._handle(logging.ERROR, message, exc_info=exc_info, **extra)


def get_logger(name: str = "trihex") -> StructuredLogger:
    """
    Obtain a structured logger instance.

    Loggers are cached by name and pick up whatever ``configure_logging``
    set last, so module-level loggers created at import time follow the CLI
    flags.
    """
    if name not in _LOGGERS:
        _LOGGERS[name] = StructuredLogger(
            name,
            log_level=_SETTINGS["level"],
            logfile=_SETTINGS["logfile"],
            fmt=_SETTINGS["fmt"],
        )
    return _LOGGERS[name]


def configure_logging(level: str = "WARNING", fmt: str = "console", logfile: Optional[str] = None) -> None:
    """Retune every logger handed out so far (and all future ones)."""
    _SETTINGS.update({"level": level, "fmt": fmt, "logfile": logfile})
    for structured in _LOGGERS.values():
        structured.configure(level, logfile=logfile, fmt=fmt)


def log_execution_time(logger: StructuredLogger):
    """Decorator to log execution durations for diagnostic purposes."""

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                duration = time.perf_counter() - start
                logger.debug(f"{func.__name__} completed", duration_seconds=round(duration, 4))

        return wrapper

    return decorator
