"""
Command-line surface of covpovm.
"""

__all__ = ['client']
