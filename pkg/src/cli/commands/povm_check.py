"""povm-check: validation report for a POVM document."""

from ..client import EXIT_INVALID, EXIT_OK, Command, CommandResult
from ...povm.povm import is_projective
from ...povm.validation import validate_povm


class PovmCheckCommand(Command):
    name = "povm-check"
    help = "Check positivity, normalisation and covariance of a POVM"

    def add_arguments(self, parser):
        parser.add_argument("--povm", required=True)

    def run(self, args, ctx):
        povm = ctx.workspace.load_povm(args.povm, validate=False)
        report = validate_povm(povm, ctx.config.tolerances)
        document = report.to_document()
        document["is_projective"] = bool(report.ok and is_projective(povm, ctx.config.tolerances))
        return CommandResult(document, EXIT_OK if report.ok else EXIT_INVALID)


def setup(cli):
    cli.add_command(PovmCheckCommand())
