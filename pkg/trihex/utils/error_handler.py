"""
Error handling utilities for trihex.

Every failure raised by the library is a ``TrihexError`` carrying a category
and severity, so the CLI can map it to an exit code and ``verify`` can
collect failures instead of stopping at the first one.
"""

from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from threading import Lock
from typing import Any, Deque, Dict, List, Optional

logger = logging.getLogger(__name__)


class ErrorCategory(Enum):
    """Classification of failures to simplify downstream handling."""

    VALIDATION = "validation"
    CONSISTENCY = "consistency"
    CONFIGURATION = "configuration"
    IO = "io"


class ErrorSeverity(Enum):
    """Relative severity of errors."""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


_EXIT_CODES = {
    ErrorCategory.VALIDATION: 2,
    ErrorCategory.CONFIGURATION: 2,
    ErrorCategory.CONSISTENCY: 3,
    ErrorCategory.IO: 1,
}


@dataclass
class ErrorInfo:
    """Structured metadata about an error occurrence."""

    category: ErrorCategory
    severity: ErrorSeverity
    message: str
    timestamp: float = field(default_factory=time.time)
    context: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_error(cls, error: "TrihexError", **context: Any) -> "ErrorInfo":
        merged = dict(error.details)
        merged.update(context)
        return cls(category=error.category, severity=error.severity, message=error.message, context=merged)


class TrihexError(Exception):
    """Base exception used within the trihex stack."""

    def __init__(
        self,
        message: str,
        *,
        category: ErrorCategory = ErrorCategory.VALIDATION,
        severity: ErrorSeverity = ErrorSeverity.MEDIUM,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.category = category
        self.severity = severity
        self.details = details or {}

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.category]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "message": self.message,
            "category": self.category.value,
            "severity": self.severity.value,
            "details": self.details,
        }


class SignatureError(TrihexError):
    """A signature failed to parse or violates 0 <= f <= s."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message, category=ErrorCategory.VALIDATION, severity=ErrorSeverity.LOW, details=details)


class VertexCountError(TrihexError):
    """A vertex count that is not a positive multiple of 4."""

    def __init__(self, v: int) -> None:
        super().__init__(
            f"vertex count must be a positive multiple of 4, got {v}",
            category=ErrorCategory.VALIDATION,
            severity=ErrorSeverity.LOW,
            details={"v": v},
        )


class LatticeError(TrihexError):
    """Malformed hexagon triple handed to the tiling model."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message, category=ErrorCategory.VALIDATION, severity=ErrorSeverity.MEDIUM, details=details)


class DocumentError(TrihexError):
    """A graph document that cannot be read back into a map."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message, category=ErrorCategory.VALIDATION, severity=ErrorSeverity.MEDIUM, details=details)


class ConfigurationError(TrihexError):
    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message, category=ErrorCategory.CONFIGURATION, severity=ErrorSeverity.MEDIUM, details=details)


class ConsistencyError(TrihexError):
    """
    Internal contradiction: an unsolvable offset congruence, an orbit count
    that disagrees with the counting formulas, a dangling dart, a failed
    identification. Always a bug, never bad input.
    """

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message, category=ErrorCategory.CONSISTENCY, severity=ErrorSeverity.CRITICAL, details=details)


class ErrorTracker:
    """Rolling buffer capturing recent errors for diagnostics."""

    def __init__(self, max_entries: int = 100):
        self.max_entries = max_entries
        self._errors: Deque[ErrorInfo] = deque(maxlen=max_entries)
        self._total = 0
        self._lock = Lock()

    def add(self, info: ErrorInfo) -> None:
        with self._lock:
            self._errors.append(info)
            self._total += 1
        logger.debug("Recorded %s error: %s", info.category.value, info.message)

    def record(self, error: TrihexError, **context: Any) -> ErrorInfo:
        info = ErrorInfo.from_error(error, **context)
        self.add(info)
        return info

    @property
    def total(self) -> int:
        with self._lock:
            return self._total

    def recent(self, limit: int = 20) -> List[ErrorInfo]:
        with self._lock:
            return list(self._errors)[-limit:]

    def counts_by_category(self) -> Dict[str, int]:
        with self._lock:
            counts: Dict[str, int] = {}
            for err in self._errors:
                counts[err.category.value] = counts.get(err.category.value, 0) + 1
            return counts

    def worst_exit_code(self) -> int:
        """Exit code for the most serious recorded category (0 when empty)."""
        with self._lock:
            codes = [_EXIT_CODES[err.category] for err in self._errors]
        if not codes:
            return 0
        return 3 if 3 in codes else max(codes)
