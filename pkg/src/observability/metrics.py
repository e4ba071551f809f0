#!/usr/bin/env python3
"""
Metrics collection for covpovm.
"""

import threading
from typing import Dict

COUNTERS = (
    "kernels_built_total",
    "kernels_validated_total",
    "povms_built_total",
    "povms_validated_total",
    "validation_failures_total",
    "factorizations_total",
    "extremality_checks_total",
    "internal_inconsistency_total",
    "decompositions_total",
    "rank1_certificates_total",
)


class Metrics:
    """Collection of metrics counters."""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self):
        """Zero every counter."""
        with self._lock:
            for name in COUNTERS:
                setattr(self, name, 0)

    def _bump(self, name: str, amount: int = 1):
        with self._lock:
            setattr(self, name, getattr(self, name) + amount)

    def increment_kernels_built(self):
        """Increment kernels built counter."""
        self._bump("kernels_built_total")

    def increment_kernels_validated(self):
        """Increment kernels validated counter."""
        self._bump("kernels_validated_total")

    def increment_povms_built(self):
        """Increment POVMs built counter."""
        self._bump("povms_built_total")

    def increment_povms_validated(self):
        """Increment POVMs validated counter."""
        self._bump("povms_validated_total")

    def increment_validation_failures(self):
        """Increment failed validation counter."""
        self._bump("validation_failures_total")

    def increment_factorizations(self):
        """Increment RKHS factorization counter."""
        self._bump("factorizations_total")

    def increment_extremality_checks(self):
        """Increment extremality decision counter."""
        self._bump("extremality_checks_total")

    def increment_internal_inconsistency(self):
        """Increment criterion disagreement counter."""
        self._bump("internal_inconsistency_total")

    def increment_decompositions(self):
        """Increment convex decomposition counter."""
        self._bump("decompositions_total")

    def increment_rank1_certificates(self, amount: int = 1):
        """Increment rank-1 certificate counter."""
        self._bump("rank1_certificates_total", amount)

    def snapshot(self) -> Dict[str, int]:
        """Return a copy of every counter."""
        with self._lock:
            return {name: getattr(self, name) for name in COUNTERS}


# Global metrics instance
metrics = Metrics()
