"""
Rank-one covariant kernels: existence certificates, construction and the
rank-one vector of a kernel.
"""

__all__ = ['certificates']
