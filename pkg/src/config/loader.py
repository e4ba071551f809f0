#!/usr/bin/env python3
"""
Configuration loader for covpovm.
Handles loading from environment variables and config file.
"""

import dataclasses
import json
import logging
import os
from typing import Dict, Mapping, Optional

from .models import Config, Tolerances

logger = logging.getLogger(__name__)

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")


def parse_tolerances(raw: str, base: Optional[Tolerances] = None) -> Tolerances:
    """
    Parse the COVPOVM_TOL value.

    Args:
        raw (str): either a single float (applied to the unitary and psd
            tolerances) or a comma list such as ``psd=1e-8,rank=1e-7``
        base (Tolerances): values not mentioned in ``raw``

    Returns:
        Tolerances: the merged tolerances

    Raises:
        ValueError: on unknown keys or non-positive values
    """
    base = base or Tolerances()
    raw = raw.strip()
    if not raw:
        return base
    if "=" not in raw:
        value = float(raw)
        if value <= 0:
            raise ValueError(f"COVPOVM_TOL must be positive, got {raw}")
        return dataclasses.replace(base, unitary=value, psd=value)

    known = {f.name for f in dataclasses.fields(Tolerances)}
    updates: Dict[str, float] = {}
    for part in raw.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in known:
            raise ValueError(f"Unknown tolerance '{key}' in COVPOVM_TOL (known: {sorted(known)})")
        updates[key] = float(value)
        if updates[key] <= 0:
            raise ValueError(f"Tolerance '{key}' must be positive, got {value}")
    return dataclasses.replace(base, **updates)


def load_config(environ: Optional[Mapping[str, str]] = None) -> Config:
    """
    Load configuration from environment variables and config file.

    Args:
        environ: mapping to read instead of ``os.environ`` (tests)

    Returns:
        Config: Configuration object with all settings loaded
    """
    env = os.environ if environ is None else environ

    config = Config(
        config_path=env.get("COVPOVM_CONFIG"),
        log_level=env.get("COVPOVM_LOG_LEVEL", "warning"),
    )

    # Optional config file first, environment takes precedence afterwards
    if config.config_path and os.path.exists(config.config_path):
        try:
            with open(config.config_path, "r") as f:
                file_config = json.load(f)
            for key, value in file_config.items():
                if key == "tolerances" and isinstance(value, dict):
                    config.tolerances = dataclasses.replace(
                        config.tolerances, **{k: float(v) for k, v in value.items()}
                    )
                elif hasattr(config, key):
                    setattr(config, key, value)
        except Exception as e:
            logger.warning(f"Could not load config file {config.config_path}: {e}")

    if "COVPOVM_TOL" in env:
        config.tolerances = parse_tolerances(env["COVPOVM_TOL"], config.tolerances)
    if "COVPOVM_SEED" in env:
        config.seed = int(env["COVPOVM_SEED"])
    if "COVPOVM_LOG_LEVEL" in env:
        config.log_level = env["COVPOVM_LOG_LEVEL"]

    validate_config(config)
    return config


def validate_config(config: Config) -> None:
    """
    Validate configuration values.

    Args:
        config (Config): Configuration object to validate

    Raises:
        ValueError: If any value is out of range
    """
    if config.log_level.lower() not in LOG_LEVELS:
        raise ValueError(f"COVPOVM_LOG_LEVEL must be one of {LOG_LEVELS}, got '{config.log_level}'")

    for f in dataclasses.fields(Tolerances):
        if getattr(config.tolerances, f.name) <= 0:
            raise ValueError(f"Tolerance '{f.name}' must be positive")

    if config.output_digits < 1 or config.output_digits > 17:
        raise ValueError("output_digits must lie in 1..17")

    if config.seed is not None and config.seed < 0:
        raise ValueError("Seed must be non-negative")
