"""
Covariant POVMs on Omega = G/H, stored by their atoms E({omega}).
"""

__all__ = ['report', 'povm', 'davies', 'validation']
