#!/usr/bin/env python3
"""
Configuration models for covpovm.
"""

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by every validation and rank decision."""

    # max-entry deviation allowed for unitarity / homomorphism / orthogonality
    unitary: float = 1e-9
    # min eigenvalue >= -psd * (1 + largest eigenvalue)
    psd: float = 1e-9
    # Gram eigenvalues above rank * lambda_max count towards the RKHS rank
    rank: float = 1e-8
    # max-entry deviation for operator identities (normalisation, covariance, traces)
    equality: float = 1e-9


DEFAULT_TOLERANCES = Tolerances()


@dataclass
class Config:
    """Configuration settings for a covpovm run."""

    # Numerical settings
    tolerances: Tolerances = field(default_factory=Tolerances)

    # Randomised commands require a seed; None means "not given"
    seed: Optional[int] = None

    # Output settings
    output_digits: int = 12

    # Logging settings
    log_level: str = "warning"

    # Optional JSON file merged over the defaults
    config_path: Optional[str] = None
