"""
Finite group arithmetic, irreducible representations and abelian utilities.
"""

__all__ = ['core', 'irreps', 'abelian']
