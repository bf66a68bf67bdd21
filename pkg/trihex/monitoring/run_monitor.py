"""
Run metrics for batch commands.

Counts what a census, stats or verify run did and samples process memory,
so the CLI can log one summary record at the end.
"""

from __future__ import annotations

import logging
import time
from threading import Lock
from typing import Any, Dict

import psutil

logger = logging.getLogger(__name__)


class RunMonitor:
    """Collects counters for a single CLI invocation."""

    def __init__(self) -> None:
        self._lock = Lock()
        self._process = psutil.Process()
        self.reset()

    # ----------------------------------------------------------------- lifecycle
    def reset(self) -> None:
        with self._lock:
            self.start_time = time.time()
            self.maps_built = 0
            self.checks_run = 0
            self.checks_failed = 0
            self.census_rows = 0
            self.peak_rss_bytes = 0

    # ---------------------------------------------------------------- metrics api
    def record_build(self, count: int = 1) -> None:
        with self._lock:
            self.maps_built += count
        self.sample_memory()

    def record_check(self, passed: bool) -> None:
        with self._lock:
            self.checks_run += 1
            if not passed:
                self.checks_failed += 1

    def record_census_rows(self, count: int) -> None:
        with self._lock:
            self.census_rows += max(count, 0)
        self.sample_memory()

    def sample_memory(self) -> int:
        try:
            rss = self._process.memory_info().rss
        except psutil.Error as exc:
            logger.debug("Memory sample failed: %s", exc)
            return 0
        with self._lock:
            if rss > self.peak_rss_bytes:
                self.peak_rss_bytes = rss
        return rss

    # ---------------------------------------------------------------- getters
    def uptime(self) -> float:
        with self._lock:
            return time.time() - self.start_time

    def get_metrics(self) -> Dict[str, Any]:
        elapsed = self.uptime()
        with self._lock:
            return {
                "elapsed_seconds": round(elapsed, 3),
                "maps_built": self.maps_built,
                "checks_run": self.checks_run,
                "checks_failed": self.checks_failed,
                "census_rows": self.census_rows,
                "peak_rss_mb": round(self.peak_rss_bytes / (1024 * 1024), 1),
            }
