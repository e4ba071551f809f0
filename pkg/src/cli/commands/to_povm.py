"""to-povm: the covariant POVM of a kernel."""

from ..client import Command, CommandResult
from ...povm.povm import povm_from_kernel
from ...storage.documents import encode_povm


class ToPovmCommand(Command):
    name = "to-povm"
    help = "Convert a kernel into its covariant POVM"

    def add_arguments(self, parser):
        parser.add_argument("--kernel", required=True)

    def run(self, args, ctx):
        kernel = ctx.workspace.load_kernel(args.kernel)
        povm = povm_from_kernel(kernel, ctx.config.tolerances)
        return CommandResult(encode_povm(povm, ctx.system_ref(kernel.system), ctx.digits))


def setup(cli):
    cli.add_command(ToPovmCommand())
