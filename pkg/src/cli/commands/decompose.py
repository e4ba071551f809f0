"""decompose: split a non-extremal kernel into two kernels."""

import numpy as np

from ..client import Command, CommandResult, UsageError
from ...extremal.criterion import decompose_along, decompose_to_extremals, is_extremal
from ...storage.documents import encode_kernel
from ...utils.linalg import max_abs


class DecomposeCommand(Command):
    name = "decompose"
    help = "K = (K+ + K-)/2 along a perturbation witness"

    def add_arguments(self, parser):
        parser.add_argument("--kernel", required=True)
        parser.add_argument("--witness-index", type=int, default=0)
        parser.add_argument("--iterate", type=int, default=None, metavar="N",
                            help="experimental: keep splitting for up to N rounds")

    def run(self, args, ctx):
        tol = ctx.config.tolerances
        kernel = ctx.workspace.load_kernel(args.kernel)
        ref = ctx.system_ref(kernel.system)
        if args.iterate is not None:
            result = decompose_to_extremals(kernel, args.iterate, tol)
            return CommandResult({
                "complete": result.complete,
                "steps": result.steps,
                "leaves": [{"weight": w, "kernel": encode_kernel(k, ref, ctx.digits)} for w, k in result.leaves],
                "recombination_residual": max_abs(result.recombine() - kernel.to_dense()),
            })

        verdict = is_extremal(kernel, tol)
        if verdict.extremal:
            return CommandResult({"extremal": True, "rank": verdict.rank})
        if not 0 <= args.witness_index < len(verdict.witnesses):
            raise UsageError(f"--witness-index must lie in 0..{len(verdict.witnesses) - 1}")
        plus, minus = decompose_along(kernel, verdict.witnesses[args.witness_index], tol, verdict.factorization)
        midpoint = 0.5 * (plus.to_dense() + minus.to_dense())
        return CommandResult({
            "extremal": False,
            "rank": verdict.rank,
            "plus": encode_kernel(plus, ref, ctx.digits),
            "minus": encode_kernel(minus, ref, ctx.digits),
            "midpoint_residual": max_abs(midpoint - kernel.to_dense()),
            "separation": float(np.max(np.abs(plus.to_dense() - minus.to_dense()))),
        })


def setup(cli):
    cli.add_command(DecomposeCommand())
