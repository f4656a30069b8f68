"""
Structure commands - classify, analyze, kernel, holograph.
"""

import click

from mimir.build import holograph
from mimir.fraction import Fraction
from mimir.functor import Functor, analyze_functor, kernel
from mimir.groupoid import NOT_APPLICABLE_CLASSES, classify
from ..decorators import EXIT_FALSE, EXIT_OK, load_document, report_errors, with_settings
from ..utils import (
    describe_groupoid,
    emit,
    fraction_document,
    fraction_summary,
    groupoid_summary,
    write_document,
)


def register_structure_commands(cli):
    """Register the groupoid and functor inspection commands on the click group."""

    @cli.command(name="classify")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @with_settings
    @report_errors
    def classify_command(file, name, settings):
        """Print the special classes of groupoid NAME."""
        g = load_document(file, settings).groupoid(name)
        flags = classify(g)
        emit(settings, {
            "groupoid": name,
            "class": list(flags.names()),
            "not_applicable": list(NOT_APPLICABLE_CLASSES),
            "summary": groupoid_summary(g),
        }, [str(flags)])
        return EXIT_OK

    @cli.command(name="analyze")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @click.option("--split", is_flag=True, help="Also search for a section.")
    @click.option("--require", "required", multiple=True, help="Exit 1 unless this property holds.")
    @with_settings
    @report_errors
    def analyze_command(file, name, split, required, settings):
        """Print every property flag of functor NAME."""
        f = load_document(file, settings).functor(name)
        profile = analyze_functor(f, with_split=split, max_arrows=settings["max_arrows"])
        flags = profile.as_dict()
        unknown = [p for p in required if p not in flags]
        if unknown:
            raise click.BadParameter(f"unknown property '{unknown[0]}'", param_hint="--require")
        missing = [p for p in required if flags[p] is not True]
        emit(settings, {"functor": name, "profile": flags, "missing": missing}, [
            " ".join(profile.names()) or "-",
            *([f"missing: {' '.join(missing)}"] if missing else []),
        ])
        return EXIT_FALSE if missing else EXIT_OK

    @cli.command(name="kernel")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @with_settings
    @report_errors
    def kernel_command(file, name, settings):
        """Print the kernel of functor NAME: arrows sent to units."""
        f = load_document(file, settings).functor(name)
        k = kernel(f)
        report = {
            "functor": name,
            "arrows": list(k.arrow_ids),
            "null": k.is_null,
            "principal": k.is_principal,
            "uniferous": k.is_uniferous,
        }
        emit(settings, report, [
            f"kernel arrows: {' '.join(str(a) for a in k.arrow_ids)}",
            f"null={k.is_null} principal={k.is_principal} uniferous={k.is_uniferous}",
        ])
        return EXIT_OK

    @cli.command(name="holograph")
    @click.argument("file", type=click.Path())
    @click.argument("name")
    @click.option("--output", type=click.Path(), default=None, help="Write the holograph fraction as GPD.")
    @with_settings
    @report_errors
    def holograph_command(file, name, output, settings):
        """Build the holograph fraction (p, q) of functor NAME."""
        doc = load_document(file, settings)
        f = doc.functor(name)
        h = holograph(f, settings["max_construction_arrows"])
        p_profile, q_profile = analyze_functor(h.p), analyze_functor(h.q)
        split = h.section.then(h.q).same_maps(Functor.identity(f.dom))
        report = {
            "functor": name,
            "fraction": fraction_summary(Fraction(h.p, h.q)),
            "p_exactor": p_profile.exactor,
            "q_s_equivalence": q_profile.s_equivalence,
            "section_verified": split,
        }
        emit(settings, report, [
            f"apex: {describe_groupoid(report['fraction']['apex'])}",
            f"p exactor={p_profile.exactor} q s-equivalence={q_profile.s_equivalence} section verified={split}",
        ])
        if output:
            dom_name, cod_name = doc.functor_ends[name]
            fr = Fraction(h.p, h.q)
            write_document(output, fraction_document(f"{name}_holograph", fr, dom_name, cod_name), settings)
        return EXIT_OK

    return [
        classify_command,
        analyze_command,
        kernel_command,
        holograph_command,
    ]
