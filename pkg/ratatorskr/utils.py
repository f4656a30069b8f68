"""
Report formatting for the command surface.
"""

import json
from typing import Dict, List, Optional

import click

from bifrost import Document, bifrost

from mimir.bibundle import Bibundle
from mimir.fraction import Fraction
from mimir.functor import Functor
from mimir.groupoid import FiniteGroupoid, classify, orbits_and_vertex_groups


def groupoid_summary(g: FiniteGroupoid) -> Dict:
    decomposition = orbits_and_vertex_groups(g)
    return {
        "objects": g.n_objects,
        "arrows": g.n_arrows,
        "orbits": decomposition.count,
        "vertex_group_orders": [v.n_arrows for v in decomposition.vertex_groups],
        "class": list(classify(g).names()),
    }


def functor_summary(f: Functor) -> Dict:
    return {
        "dom": groupoid_summary(f.dom),
        "cod": groupoid_summary(f.cod),
        "f0": list(f.f0.image),
        "f1": list(f.f1.image),
    }


def fraction_summary(fr: Fraction) -> Dict:
    return {
        "apex": groupoid_summary(fr.apex),
        "source": groupoid_summary(fr.source),
        "target": groupoid_summary(fr.target),
    }


def bibundle_summary(b: Bibundle) -> Dict:
    return {
        "points": b.n_points,
        "rho": list(b.rho),
        "sigma": list(b.sigma),
        "left_action": sorted([h, e, image] for (h, e), image in b.left_action.items()),
        "right_action": sorted([e, g, image] for (e, g), image in b.right_action.items()),
    }


def describe_groupoid(summary: Dict) -> str:
    """One line: sizes, orbit count and vertex group orders."""
    orders = ",".join(str(n) for n in summary["vertex_group_orders"]) or "-"
    return (
        f"{summary['objects']} objects, {summary['arrows']} arrows, "
        f"{summary['orbits']} orbits, vertex groups of order {orders}"
    )


def emit(settings: dict, report: Dict, lines: Optional[List[str]] = None):
    """
    Print a command report on stdout.

    With --json the report dict is printed with sorted keys; otherwise the
    text lines are.
    """
    if settings.get("json", False):
        click.echo(json.dumps(report, sort_keys=True, indent=2))
        return
    for line in lines or []:
        click.echo(line)


def fraction_document(name: str, fr: Fraction, source_name: str, target_name: str) -> Document:
    """A document holding fr as `name` with its apex, legs and both ends."""
    doc = Document()
    doc.groupoids[source_name] = fr.source
    if target_name != source_name:
        doc.groupoids[target_name] = fr.target
    doc.groupoids[f"{name}_apex"] = fr.apex
    doc.functors[f"{name}_p"] = fr.p
    doc.functor_ends[f"{name}_p"] = (f"{name}_apex", target_name)
    doc.functors[f"{name}_q"] = fr.q
    doc.functor_ends[f"{name}_q"] = (f"{name}_apex", source_name)
    doc.fractions[name] = fr
    doc.fraction_legs[name] = (f"{name}_p", f"{name}_q")
    return doc


def write_document(path: str, doc: Document, settings: dict):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(bifrost.serialize_document(doc))
    if settings.get("debug", False):
        click.echo(f"[CLI] Wrote {path}", err=True)
