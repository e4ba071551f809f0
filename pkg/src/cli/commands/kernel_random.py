"""kernel-random: a seeded random kernel on a system."""

from ..client import Command, CommandResult
from ...kernel.kernel import random_kernel
from ...storage.documents import encode_kernel


class KernelRandomCommand(Command):
    name = "kernel-random"
    help = "Random covariant kernel from random isometries (needs --seed)"

    def add_arguments(self, parser):
        parser.add_argument("--system", required=True)
        parser.add_argument("--aux-dim", type=int, default=None)

    def run(self, args, ctx):
        seed = ctx.require_seed(args.seed)
        system = ctx.workspace.load_system(args.system)
        kernel = random_kernel(system, seed, args.aux_dim)
        return CommandResult(encode_kernel(kernel, ctx.system_ref(system), ctx.digits))


def setup(cli):
    cli.add_command(KernelRandomCommand())
