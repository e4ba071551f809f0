#!/usr/bin/env python3
"""
Command dispatcher: loads every command module, builds the argument parser
and maps errors to exit codes (0 success, 2 validation failure, 1 malformed
input).
"""

import argparse
import importlib
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, TextIO

import numpy as np

from ..config.models import Config
from ..errors import CovPovmError, InputError, UnknownSubcommand, UsageError, ValidationError
from ..observability.logger import structured_logger
from ..observability.metrics import metrics
from ..storage import documents
from ..storage.workspace import Workspace, relative_ref
from ..utils.formatting import encode_matrix, to_jsonable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_INVALID = 2

COMMAND_MODULES = [
    "validate",
    "kernel_random",
    "kernel_check",
    "to_povm",
    "from_povm",
    "povm_check",
    "davies",
    "extremal",
    "decompose",
    "rank1",
    "prob",
    "fixture",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandResult:
    document: Any
    exit_code: int = EXIT_OK


@dataclass
class CommandContext:
    config: Config
    workspace: Workspace
    out: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def digits(self) -> int:
        return self.config.output_digits

    def ref_to(self, target: str) -> str:
        """Reference to ``target`` as written into the output document."""
        if self.out:
            return relative_ref(target, self.out)
        return os.path.relpath(target).replace(os.sep, "/")

    def system_ref(self, system) -> str:
        path = self.workspace.system_path(system)
        if path is None:
            raise UsageError("Output refers to a system that was not loaded from a file")
        return self.ref_to(path)

    def require_seed(self, seed: Optional[int]) -> int:
        seed = self.config.seed if seed is None else seed
        if seed is None:
            raise UsageError("This command is randomised: pass --seed N or set COVPOVM_SEED")
        return seed


class Command:
    """Base class for subcommands."""

    name = ""
    help = ""

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def run(self, args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
        raise NotImplementedError


class CovPovmCli:
    def __init__(self, config: Config):
        self.config = config
        self.commands: Dict[str, Command] = {}
        self._load_commands()

    def add_command(self, command: Command) -> None:
        self.commands[command.name] = command

    def _load_commands(self) -> None:
        loaded = []
        for module_name in COMMAND_MODULES:
            module = importlib.import_module(f"{__package__}.commands.{module_name}")
            module.setup(self)
            loaded.append(module_name)
        logger.debug("Loaded command modules: %s", loaded)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _Parser(prog="covpovm", description="Covariant POVMs on finite groups")
        sub = parser.add_subparsers(dest="command", parser_class=_Parser)
        for name in sorted(self.commands):
            command = self.commands[name]
            p = sub.add_parser(name, help=command.help)
            p.add_argument("--out", help="write the report to this path instead of stdout")
            p.add_argument("--seed", type=int, default=None, help="seed for randomised commands")
            command.add_arguments(p)
        return parser

    def run(self, argv: List[str], stdout: Optional[TextIO] = None) -> int:
        stdout = stdout or sys.stdout
        command_name = argv[0] if argv else None
        try:
            if not argv or argv[0].startswith("-") and argv[0] not in ("-h", "--help"):
                raise UnknownSubcommand("No subcommand given", {"known": sorted(self.commands)})
            if argv[0] not in self.commands and argv[0] not in ("-h", "--help"):
                raise UnknownSubcommand(f"Unknown subcommand '{argv[0]}'", {"known": sorted(self.commands)})
            args = self.build_parser().parse_args(argv)
        except CovPovmError as e:
            return self._fail(command_name, e, EXIT_MALFORMED)

        ctx = CommandContext(config=self.config, workspace=Workspace(self.config.tolerances), out=args.out)
        command = self.commands[args.command]
        try:
            result = command.run(args, ctx)
        except ValidationError as e:
            result = CommandResult(_error_document(e, self.config.output_digits), EXIT_INVALID)
        except InputError as e:
            return self._fail(command_name, e, EXIT_MALFORMED)
        except CovPovmError as e:
            # internal consistency failures
            logger.error(f"{type(e).__name__}: {e.message}")
            result = CommandResult(_error_document(e, self.config.output_digits), EXIT_INVALID)

        try:
            self._write(result.document, args.out, stdout)
        except CovPovmError as e:
            return self._fail(command_name, e, EXIT_MALFORMED)
        structured_logger.info("command finished", command=args.command, exit_code=result.exit_code,
                               metrics=metrics.snapshot())
        return result.exit_code

    def _write(self, document: Any, out: Optional[str], stdout: TextIO) -> None:
        if document is None:
            return
        if out:
            documents.write_json(out, document, self.config.output_digits)
        else:
            stdout.write(documents.dump_document(document, self.config.output_digits))

    def _fail(self, command_name: Optional[str], error: CovPovmError, code: int) -> int:
        logger.error(f"{type(error).__name__}: {error.message}")
        sys.stderr.write(f"covpovm: {error.message}\n")
        structured_logger.error("command failed", command=command_name, exit_code=code,
                                error=type(error).__name__, details=error.details, metrics=metrics.snapshot())
        return code


def _error_document(error: CovPovmError, digits: int = 12) -> Dict[str, Any]:
    """Error report; operator details (defects, witnesses) are written as [re, im] matrices."""
    details = {}
    for key, value in error.details.items():
        if isinstance(value, np.ndarray) and value.ndim == 2:
            details[key] = encode_matrix(value, digits)
        else:
            details[key] = to_jsonable(value, digits)
    return {"ok": False, "error": {"type": type(error).__name__, "message": error.message, "details": details}}
