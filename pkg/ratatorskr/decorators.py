"""
Decorators for command settings and exit-code mapping.
"""

import asyncio
import traceback
from functools import wraps
from typing import Callable

import click

from bifrost import Document, GpdSyntaxError, GpdValidationError, bifrost
from mimir.errors import GroupoidError, SizeGuardError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_SIZE_GUARD = 4
EXIT_UNEXPECTED = 5


def with_settings(func: Callable) -> Callable:
    """Add the shared --max-arrows/--json/--debug options and pass the merged settings dict."""
    @click.option("--max-arrows", type=int, default=None, help="Cap for exhaustive searches.")
    @click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
    @click.option("--debug", is_flag=True, help="Tagged diagnostics on stderr.")
    @wraps(func)
    def wrapper(*args, max_arrows=None, as_json=False, debug=False, **kwargs):
        settings = dict(click.get_current_context().find_root().obj or {})
        if max_arrows is not None:
            if max_arrows < 1:
                raise click.BadParameter("must be positive", param_hint="--max-arrows")
            settings["max_arrows"] = max_arrows
        settings["json"] = as_json or settings.get("json", False)
        settings["debug"] = debug or settings.get("debug", False)
        return func(*args, settings=settings, **kwargs)
    return wrapper


def report_errors(func: Callable) -> Callable:
    """Map failures to the exit-code contract; the command returns its own code otherwise."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        settings = kwargs.get("settings") or {}
        try:
            code = func(*args, **kwargs)
        except click.exceptions.ClickException:
            raise
        except click.exceptions.Exit:
            raise
        except (GpdSyntaxError, FileNotFoundError) as e:
            click.echo(f"[ERROR] {e}", err=True)
            code = EXIT_PARSE
        except (GpdValidationError, GroupoidError) as e:
            click.echo(f"[ERROR] {type(e).__name__}: {e}", err=True)
            code = EXIT_VALIDATION
        except SizeGuardError as e:
            click.echo(f"[ERROR] {e}", err=True)
            code = EXIT_SIZE_GUARD
        except Exception as e:
            click.echo(f"[ERROR] unexpected {type(e).__name__}: {e}", err=True)
            if settings.get("debug", False):
                click.echo(traceback.format_exc(), err=True)
            code = EXIT_UNEXPECTED
        if code:
            raise click.exceptions.Exit(code)
        return EXIT_OK
    return wrapper


def load_document(path: str, settings: dict) -> Document:
    """Read a GPD file through bifrost."""
    if settings.get("debug", False):
        click.echo(f"[CLI] Loading {path}", err=True)
    return asyncio.run(bifrost.read_document(path, settings))
