"""kernel-check: validation report for a kernel document."""

from ..client import EXIT_INVALID, EXIT_OK, Command, CommandResult
from ...kernel.kernel import validate_kernel


class KernelCheckCommand(Command):
    name = "kernel-check"
    help = "Check the kernel conditions and report residuals"

    def add_arguments(self, parser):
        parser.add_argument("--kernel", required=True)

    def run(self, args, ctx):
        kernel = ctx.workspace.load_kernel(args.kernel, validate=False)
        report = validate_kernel(kernel, ctx.config.tolerances)
        return CommandResult(report.to_document(), EXIT_OK if report.ok else EXIT_INVALID)


def setup(cli):
    cli.add_command(KernelCheckCommand())
