import sys
from typing import Optional, Sequence

import click

from bifrost import _shutdown_executor, bifrost
from ratatorskr import create_cli


def create_config():
    """Loads the configuration."""
    return bifrost.load_config()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the application; returns the process exit code."""
    try:
        config = create_config()
    except (FileNotFoundError, ValueError) as e:
        click.echo(f"[ERROR] {e}", err=True)
        return 3
    if config.get("debug", False):
        click.echo("[MAIN] Configuration loaded", err=True)

    cli = create_cli(config)
    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name="yggdrasil", standalone_mode=False)
        return code if isinstance(code, int) else 0
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted.", err=True)
        return 1
    finally:
        _shutdown_executor(config)
        if config.get("debug", False):
            click.echo("[MAIN] Goodbye.", err=True)


if __name__ == "__main__":
    sys.exit(main())
