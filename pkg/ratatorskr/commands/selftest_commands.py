"""
Selftest command - runs the proposition suites over the generated catalog.
"""

import asyncio

import click

from norns import SuiteRunner
from vedrfolnir import dbClient
from ..decorators import EXIT_FALSE, EXIT_OK, report_errors, with_settings
from ..utils import emit


async def run_selftest(settings: dict, pattern=None):
    """Run the suites, recording the run in the ledger when one is configured."""
    ledger = settings.get("ledger_path")
    db_instance = None
    if ledger:
        db_instance = dbClient(settings)
        await db_instance.connect(ledger)
    try:
        return await SuiteRunner(settings, db_instance).run(pattern)
    finally:
        if db_instance is not None:
            await db_instance.close()


def register_selftest_commands(cli):
    """Register the selftest command on the click group."""

    @cli.command(name="selftest")
    @click.option("--max-objects", type=int, default=None, help="Catalog bound on object counts.")
    @click.option("--seed", type=int, default=None, help="Sampling seed.")
    @click.option("--ledger", type=click.Path(), default=None, help="sqlite run ledger for the determinism check.")
    @click.option("--only", "pattern", default=None, help="Run only cases whose name contains PATTERN.")
    @with_settings
    @report_errors
    def selftest_command(max_objects, seed, ledger, pattern, settings):
        """Run every proposition suite and print the canonical report."""
        if max_objects is not None:
            if max_objects < 1:
                raise click.BadParameter("must be positive", param_hint="--max-objects")
            settings["max_objects"] = max_objects
        if seed is not None:
            settings["seed"] = seed
        if ledger is not None:
            settings["ledger_path"] = ledger

        report = asyncio.run(run_selftest(settings, pattern))
        payload = {
            "seed": report.seed,
            "max_objects": report.max_objects,
            "max_arrows": report.max_arrows,
            "counts": report.counts,
            "cases": report.as_rows(),
            "determinism": report.determinism,
            "digest": report.digest,
        }
        lines = report.text().splitlines()
        if report.determinism is not None:
            lines.append(f"determinism: {report.determinism}")
        emit(settings, payload, lines)
        return EXIT_OK if report.ok else EXIT_FALSE

    return [selftest_command]
