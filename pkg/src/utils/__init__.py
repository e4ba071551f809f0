"""
Shared helpers for covpovm.
"""

__all__ = ['linalg', 'formatting']
