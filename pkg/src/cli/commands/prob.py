"""prob: outcome distribution of a state under a POVM."""

from ..client import Command, CommandResult
from ...povm.povm import outcome_distribution


class ProbCommand(Command):
    name = "prob"
    help = "p(omega) = tr(T E({omega}))"

    def add_arguments(self, parser):
        parser.add_argument("--povm", required=True)
        parser.add_argument("--state", required=True)

    def run(self, args, ctx):
        povm = ctx.workspace.load_povm(args.povm)
        state, _ = ctx.workspace.load_operator(args.state, kind="state", system=povm.system)
        probs = outcome_distribution(povm, state, ctx.config.tolerances)
        return CommandResult({"probabilities": {str(w): float(p) for w, p in enumerate(probs)}})


def setup(cli):
    cli.add_command(ProbCommand())
