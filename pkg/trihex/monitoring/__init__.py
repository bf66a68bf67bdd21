"""Run metrics for batch commands."""

from trihex.monitoring.run_monitor import RunMonitor

__all__ = ["RunMonitor"]
