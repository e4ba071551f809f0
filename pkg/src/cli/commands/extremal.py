"""extremal: extremality verdict for a kernel."""

from ..client import Command, CommandResult
from ...extremal.criterion import is_extremal


class ExtremalCommand(Command):
    name = "extremal"
    help = "Decide whether a kernel is an extreme point"

    def add_arguments(self, parser):
        parser.add_argument("--kernel", required=True)
        parser.add_argument("--system", help="check that the kernel belongs to this system")

    def run(self, args, ctx):
        system = ctx.workspace.load_system(args.system) if args.system else None
        kernel = ctx.workspace.load_kernel(args.kernel, system=system)
        verdict = is_extremal(kernel, ctx.config.tolerances)
        return CommandResult(verdict.to_document(ctx.digits))


def setup(cli):
    cli.add_command(ExtremalCommand())
