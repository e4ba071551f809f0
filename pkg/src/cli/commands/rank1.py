"""rank1: rank-one kernel certificates of a system."""

from ..client import Command, CommandResult
from ...rank1.certificates import build_rank1, rank1_existence, rank1_obstruction
from ...storage.documents import encode_kernel


class Rank1Command(Command):
    name = "rank1"
    help = "List the characters of H that admit rank-one kernels"

    def add_arguments(self, parser):
        parser.add_argument("--system", required=True)
        parser.add_argument("--build", action="store_true", help="also emit one kernel per certificate")

    def run(self, args, ctx):
        system = ctx.workspace.load_system(args.system)
        certificates = rank1_existence(system)
        document = {"certificates": [c.to_document(ctx.digits) for c in certificates]}
        if not certificates:
            document["reason"] = rank1_obstruction(system)
        if args.build:
            ref = ctx.system_ref(system)
            document["kernels"] = [encode_kernel(build_rank1(c, ctx.config.tolerances), ref, ctx.digits)
                                   for c in certificates]
        return CommandResult(document)


def setup(cli):
    cli.add_command(Rank1Command())
