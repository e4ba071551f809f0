"""
Extremality of covariant kernels: RKHS factorisation, the lifted
representation of H, the two operator subspaces and convex decompositions.
"""

__all__ = ['rkhs', 'subspaces', 'criterion']
