"""
Command-line client for the mimir groupoid toolkit.
"""

import click

from bifrost import bifrost
from .commands import (
    equivalence_commands,
    fraction_commands,
    selftest_commands,
    structure_commands,
)


def create_cli(config: dict) -> click.Group:
    """
    Build the click group and register every command module on it.

    Args:
        config (dict): validated configuration; becomes the root context object.
            --config on the group reloads it from another file.
    """
    debug = config.get("debug", False)

    @click.group(name="ratatorskr")
    @click.option("--config", "config_path", type=click.Path(), default=None, help="Alternate config.json.")
    @click.pass_context
    def cli(ctx, config_path):
        """Finite groupoids, meromorphisms and the calculus of fractions."""
        if config_path is not None:
            try:
                ctx.obj = bifrost.load_config(config_path)
            except (FileNotFoundError, ValueError) as e:
                raise click.BadParameter(str(e), param_hint="--config")
        else:
            ctx.obj = dict(config)

    if debug:
        click.echo("[CLI] Registering structure commands...", err=True)
    structure_commands.register_structure_commands(cli)
    if debug:
        click.echo("[CLI] Registering fraction commands...", err=True)
    fraction_commands.register_fraction_commands(cli)
    if debug:
        click.echo("[CLI] Registering equivalence commands...", err=True)
    equivalence_commands.register_equivalence_commands(cli)
    if debug:
        click.echo("[CLI] Registering selftest commands...", err=True)
    selftest_commands.register_selftest_commands(cli)
    if debug:
        click.echo(f"[CLI] All {len(cli.commands)} commands registered", err=True)
    return cli
