"""
Worked example systems shipped with covpovm.
"""

__all__ = ['groups', 'catalog']
