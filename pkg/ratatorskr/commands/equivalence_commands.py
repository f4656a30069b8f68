"""
Equivalence commands - morita, pi1.
"""

import click

from mimir.fraction import is_meriedric_equivalence, morita_equivalent
from mimir.reflect import fundamental_plurigroup
from ..decorators import EXIT_FALSE, EXIT_OK, load_document, report_errors, with_settings
from ..utils import describe_groupoid, emit, groupoid_summary


def register_equivalence_commands(cli):
    """Register the Morita equivalence and reflector commands on the click group."""

    @cli.command(name="morita")
    @click.argument("file", type=click.Path())
    @click.argument("first")
    @click.argument("second")
    @with_settings
    @report_errors
    def morita_command(file, first, second, settings):
        """Decide whether groupoids FIRST and SECOND are Morita equivalent."""
        doc = load_document(file, settings)
        witness = morita_equivalent(
            doc.groupoid(first), doc.groupoid(second),
            max_arrows=settings["max_arrows"],
            max_construction_arrows=settings["max_construction_arrows"],
        )
        if witness is None:
            emit(settings, {"first": first, "second": second, "equivalent": False}, ["not equivalent"])
            return EXIT_FALSE

        apex = groupoid_summary(witness.apex)
        emit(settings, {"first": first, "second": second, "equivalent": True, "witness_apex": apex}, [
            "equivalent",
            f"witness apex: {describe_groupoid(apex)}",
        ])
        return EXIT_OK

    @cli.command(name="pi1")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @with_settings
    @report_errors
    def pi1_command(file, name, settings):
        """Print the fundamental plurigroup of groupoid NAME."""
        g = load_document(file, settings).groupoid(name)
        reflection = fundamental_plurigroup(g, settings["max_construction_arrows"])
        plurigroup = groupoid_summary(reflection.plurigroup)
        # The unit of the reflection is always a meriedric equivalence for finite groupoids.
        collapse = is_meriedric_equivalence(reflection.unit)
        emit(settings, {"groupoid": name, "plurigroup": plurigroup, "unit_meriedric": collapse}, [
            f"plurigroup: {describe_groupoid(plurigroup)}",
            f"unit meriedric equivalence={collapse}",
        ])
        return EXIT_OK

    return [
        morita_command,
        pi1_command,
    ]
