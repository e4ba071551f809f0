"""
Logging and metrics for covpovm.
"""

__all__ = ['logger', 'metrics']
