#!/usr/bin/env python3
"""
Main entry point for covpovm: ``python -m src.main <subcommand> ...``.
"""

import logging
import sys
from typing import List, Optional

from .cli.client import EXIT_MALFORMED, CovPovmCli
from .config.loader import load_config
from .observability.logger import configure_logging

logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = load_config()
    except ValueError as e:
        configure_logging("warning")
        logger.error(f"Invalid configuration: {e}")
        sys.stderr.write(f"covpovm: invalid configuration: {e}\n")
        return EXIT_MALFORMED

    configure_logging(config.log_level)
    logger.debug(f"Tolerances: {config.tolerances}")
    return CovPovmCli(config).run(argv)


if __name__ == "__main__":
    sys.exit(main())
