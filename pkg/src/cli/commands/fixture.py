"""fixture: write a catalogue fixture to a directory."""

from ..client import Command, CommandResult
from ...fixtures.catalog import emit_fixture, write_fixture


class FixtureCommand(Command):
    name = "fixture"
    help = "Emit the documents of a named fixture"

    def add_arguments(self, parser):
        parser.add_argument("name")
        parser.add_argument("--dir", help="write one file per document into this directory")

    def run(self, args, ctx):
        if args.dir:
            files = write_fixture(args.name, args.dir, ctx.digits)
            return CommandResult({"fixture": args.name, "files": files})
        return CommandResult({"fixture": args.name, "documents": emit_fixture(args.name, ctx.digits)})


def setup(cli):
    cli.add_command(FixtureCommand())
