#!/usr/bin/env python3
"""
Structured logging for covpovm.
"""

import json
import logging
import sys
from datetime import datetime
from typing import Any

import pytz

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = "warning") -> None:
    """Route all covpovm logging to stderr so stdout carries only reports."""
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


class StructuredLogger:
    """Structured logger emitting one JSON object per event."""

    def __init__(self, name: str = "covpovm"):
        self.logger = logging.getLogger(name)

    def _emit(self, level: int, message: str, **kwargs: Any) -> None:
        log_data = {
            "timestamp": datetime.now(pytz.UTC).isoformat(),
            "level": logging.getLevelName(level),
            "message": message,
            **kwargs
        }
        self.logger.log(level, json.dumps(log_data, sort_keys=True, default=str))

    def info(self, message: str, **kwargs):
        """Log an info message with structured data."""
        self._emit(logging.INFO, message, **kwargs)

    def error(self, message: str, **kwargs):
        """Log an error message with structured data."""
        self._emit(logging.ERROR, message, **kwargs)

    def warning(self, message: str, **kwargs):
        """Log a warning message with structured data."""
        self._emit(logging.WARNING, message, **kwargs)

    def debug(self, message: str, **kwargs):
        """Log a debug message with structured data."""
        self._emit(logging.DEBUG, message, **kwargs)


# Global instance
structured_logger = StructuredLogger()
