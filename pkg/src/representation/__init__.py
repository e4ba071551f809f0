"""
The representation U on H = (+) H_pi (x) K_pi and its block calculus.
"""

__all__ = ['system', 'blocks']
