"""validate: check group, irreps and system documents."""

from ..client import Command, CommandResult, UsageError
from ...representation.system import commutant_dimension


class ValidateCommand(Command):
    name = "validate"
    help = "Validate group, irreps and/or system documents"

    def add_arguments(self, parser):
        parser.add_argument("--group")
        parser.add_argument("--irreps")
        parser.add_argument("--system")

    def run(self, args, ctx):
        if not (args.group or args.irreps or args.system):
            raise UsageError("Pass at least one of --group, --irreps, --system")
        ws = ctx.workspace
        report = {"ok": True}
        if args.group:
            group = ws.load_group(args.group)
            report["group"] = {
                "order": group.order,
                "subgroup_order": group.subgroup_order,
                "num_cosets": group.num_cosets,
                "abelian": group.is_abelian(),
                "representatives": list(group.representatives),
            }
        if args.irreps:
            irreps = ws.load_irreps(args.irreps)
            report["irreps"] = {"labels": list(irreps.labels), "complete": irreps.complete,
                                "dims": {p.label: p.dim for p in irreps}}
        if args.system:
            system = ws.load_system(args.system)
            report["system"] = {"dim": system.dim, "support": list(system.support),
                                "commutant_dimension": commutant_dimension(system)}
        return CommandResult(report)


def setup(cli):
    cli.add_command(ValidateCommand())
