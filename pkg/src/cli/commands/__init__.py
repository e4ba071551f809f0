"""
Subcommands; each module registers itself through ``setup(cli)``.
"""
