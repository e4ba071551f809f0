"""davies: covariant POVM from a positive H-commuting seed operator."""

from ..client import Command, CommandResult, UsageError
from ...povm.davies import davies_povm, seed_from_kernel
from ...storage.documents import encode_povm


class DaviesCommand(Command):
    name = "davies"
    help = "Build E(X) = (1/|G|) sum over q^-1(X) of U(g) C U(g)^*"

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--operator", help="operator document holding the seed C")
        source.add_argument("--kernel", help="use a valid kernel as the seed")

    def run(self, args, ctx):
        ws = ctx.workspace
        if args.kernel:
            kernel = ws.load_kernel(args.kernel)
            system, seed = kernel.system, seed_from_kernel(kernel)
        elif args.operator:
            seed, system = ws.load_operator(args.operator)
        else:
            raise UsageError("Pass --operator or --kernel")
        povm = davies_povm(system, seed, ctx.config.tolerances)
        return CommandResult(encode_povm(povm, ctx.system_ref(system), ctx.digits))


def setup(cli):
    cli.add_command(DaviesCommand())
