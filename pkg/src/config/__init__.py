"""
Configuration for covpovm.
"""

from .models import Config, Tolerances, DEFAULT_TOLERANCES
from .loader import load_config

__all__ = ['Config', 'Tolerances', 'DEFAULT_TOLERANCES', 'load_config']
