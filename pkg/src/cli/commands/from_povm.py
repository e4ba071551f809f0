"""from-povm: the kernel of a covariant POVM."""

from ..client import Command, CommandResult
from ...povm.povm import kernel_from_povm
from ...storage.documents import encode_kernel


class FromPovmCommand(Command):
    name = "from-povm"
    help = "Recover the kernel of a covariant POVM"

    def add_arguments(self, parser):
        parser.add_argument("--povm", required=True)

    def run(self, args, ctx):
        povm = ctx.workspace.load_povm(args.povm, validate=False)
        kernel = kernel_from_povm(povm, ctx.config.tolerances)
        return CommandResult(encode_kernel(kernel, ctx.system_ref(povm.system), ctx.digits))


def setup(cli):
    cli.add_command(FromPovmCommand())
