"""
Positive-type kernels: the convex coordinates of covariant POVMs.
"""

__all__ = ['isometries', 'kernel']
