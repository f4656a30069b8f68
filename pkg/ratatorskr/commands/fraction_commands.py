"""
Fraction commands - reduce, equiv, compose, bibundle, gzprobe.
"""

import click

from mimir.bibundle import to_bibundle, validate_bibundle
from mimir.fraction import compose_meromorphisms, fractions_equivalent, is_irreducible, make_meromorphism
from mimir.gzprobe import FOUND, HOLDS, INCONCLUSIVE, gz_probe
from ..decorators import EXIT_FALSE, EXIT_OK, EXIT_SIZE_GUARD, load_document, report_errors, with_settings
from ..utils import (
    bibundle_summary,
    describe_groupoid,
    emit,
    fraction_document,
    fraction_summary,
    groupoid_summary,
    write_document,
)

PROBE_ARITY = {"cstar": 2, "dstar": 3}


def _ends(doc, name):
    """Names of the source and target groupoids of fraction NAME."""
    p_name, q_name = doc.fraction_legs[name]
    return doc.functor_ends[q_name][1], doc.functor_ends[p_name][1]


def register_fraction_commands(cli):
    """Register the meromorphism commands on the click group."""

    @cli.command(name="reduce")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @click.option("--output", type=click.Path(), default=None, help="Write the reduced fraction as GPD.")
    @with_settings
    @report_errors
    def reduce_command(file, name, output, settings):
        """Reduce fraction NAME to its irreducible representative."""
        doc = load_document(file, settings)
        fr = doc.fraction(name)
        m = make_meromorphism(fr)
        verdict = is_irreducible(m.reduced, competitors=(fr,), max_arrows=settings["max_arrows"])
        conditions = dict(zip(("s_null", "n_transverse_r", "cotransverse", "u_actor", "v_actor"), verdict.conditions))
        report = {
            "fraction": name,
            "reduced": fraction_summary(m.reduced),
            "conditions": conditions,
            "terminal": verdict.terminal,
            "irreducible": verdict.irreducible,
        }
        emit(settings, report, [
            f"reduced apex: {describe_groupoid(report['reduced']['apex'])}",
            " ".join(f"{key}={value}" for key, value in conditions.items()),
            f"terminal={verdict.terminal} irreducible={verdict.irreducible}",
        ])
        if output:
            source_name, target_name = _ends(doc, name)
            write_document(output, fraction_document(f"{name}_reduced", m.reduced, source_name, target_name), settings)
        return EXIT_OK

    @cli.command(name="equiv")
    @click.argument("file", type=click.Path())
    @click.argument("first")
    @click.argument("second")
    @click.option("--mode", type=click.Choice(["reduce", "direct"]), default="reduce", show_default=True)
    @with_settings
    @report_errors
    def equiv_command(file, first, second, mode, settings):
        """Decide whether fractions FIRST and SECOND define the same meromorphism."""
        doc = load_document(file, settings)
        fr1, fr2 = doc.fraction(first), doc.fraction(second)
        witness = fractions_equivalent(
            fr1, fr2, mode=mode,
            max_arrows=settings["max_arrows"],
            max_construction_arrows=settings["max_construction_arrows"],
        )
        report = {"first": first, "second": second, "mode": mode, "equivalent": witness is not None}
        lines = ["equivalent" if witness is not None else "not equivalent"]
        if witness is not None:
            report["witness_apex"] = groupoid_summary(witness.apex)
            lines.append(f"common apex: {describe_groupoid(report['witness_apex'])}")
        emit(settings, report, lines)
        return EXIT_OK if witness is not None else EXIT_FALSE

    @cli.command(name="compose")
    @click.argument("file", type=click.Path())
    @click.argument("first")
    @click.argument("second")
    @click.option("--output", type=click.Path(), default=None, help="Write the composite as GPD.")
    @with_settings
    @report_errors
    def compose_command(file, first, second, output, settings):
        """Compose meromorphisms: SECOND after FIRST."""
        doc = load_document(file, settings)
        m1, m2 = make_meromorphism(doc.fraction(first)), make_meromorphism(doc.fraction(second))
        composite = compose_meromorphisms(m2, m1, max_construction_arrows=settings["max_construction_arrows"])
        report = {"first": first, "second": second, "composite": fraction_summary(composite.reduced)}
        emit(settings, report, [f"composite apex: {describe_groupoid(report['composite']['apex'])}"])
        if output:
            source_name = _ends(doc, first)[0]
            target_name = _ends(doc, second)[1]
            written = fraction_document(f"{second}_after_{first}", composite.reduced, source_name, target_name)
            write_document(output, written, settings)
        return EXIT_OK

    @cli.command(name="bibundle")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @with_settings
    @report_errors
    def bibundle_command(file, name, settings):
        """Print the bibundle of fraction NAME and check its laws."""
        b = to_bibundle(make_meromorphism(load_document(file, settings).fraction(name)))
        validation = validate_bibundle(b)
        report = {"fraction": name, "bibundle": bibundle_summary(b), "valid": validation.ok,
                  "violations": [str(v) for v in validation.violations]}
        emit(settings, report, [
            f"points {b.n_points}, rho {' '.join(map(str, b.rho))}, sigma {' '.join(map(str, b.sigma))}",
            "valid" if validation.ok else f"invalid: {validation.first}",
        ])
        return EXIT_OK if validation.ok else EXIT_FALSE

    @cli.command(name="gzprobe")
    @click.argument("file", type=click.Path())
    @click.argument("kind", type=click.Choice(sorted(PROBE_ARITY)))
    @click.argument("functors", nargs=-1, required=True)
    @with_settings
    @report_errors
    def gzprobe_command(file, kind, functors, settings):
        """
        Probe a calculus-of-fractions condition.

        cstar F S completes F and the s-equivalence S into a pullback; dstar F G S
        searches for an s-equivalence equalizing F and G when S does.
        """
        if len(functors) != PROBE_ARITY[kind]:
            raise click.BadParameter(f"{kind} takes {PROBE_ARITY[kind]} functors", param_hint="FUNCTORS")
        doc = load_document(file, settings)
        report = gz_probe(
            kind, *(doc.functor(n) for n in functors),
            max_arrows=settings["max_arrows"],
            max_construction_arrows=settings["max_construction_arrows"],
        )
        emit(settings, {"kind": kind, "functors": list(functors), "outcome": report.outcome,
                        "cap": report.cap, "detail": report.detail},
             [f"{kind}: {report.outcome} (cap {report.cap}) {report.detail}".rstrip()])
        if report.outcome == INCONCLUSIVE:
            return EXIT_SIZE_GUARD
        return EXIT_OK if report.outcome in (FOUND, HOLDS) else EXIT_FALSE

    return [
        reduce_command,
        equiv_command,
        compose_command,
        bibundle_command,
        gzprobe_command,
    ]

