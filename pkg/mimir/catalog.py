"""
Deterministic catalog of small groupoids, functors and meromorphisms.

Functors between two catalog groupoids are enumerated in search order; when a
pair has more than the per-pair limit, the kept ones are a seeded sample.
"""

from dataclasses import dataclass
from itertools import islice
from typing import List, Optional, Tuple

import numpy

from .build import induce
from .errors import SizeGuardError
from .fraction import Fraction, Meromorphism, gamma, make_meromorphism
from .functor import Functor, constant_functor
from .groupoid import (
    DEFAULT_MAX_ARROWS,
    DEFAULT_MAX_CONSTRUCTION_ARROWS,
    FiniteGroupoid,
    SetMap,
    build_standard,
    cyclic_group,
    null_groupoid,
    pair_groupoid,
)
from .search import search_functors

SMALL_ARROWS = 4
SAMPLE_POOL = 64


@dataclass(frozen=True)
class Entry:
    name: str
    groupoid: FiniteGroupoid


@dataclass(frozen=True)
class FunctorEntry:
    name: str
    functor: Functor


@dataclass(frozen=True)
class MeromorphismEntry:
    name: str
    meromorphism: Meromorphism


def catalog_groupoids(max_objects: int = 3) -> List[Entry]:
    """Catalog groupoids with at most max_objects objects, in a fixed order."""
    z2 = cyclic_group(2)
    entries = [Entry(f"null{k}", null_groupoid(k)) for k in range(1, 4)]
    entries += [Entry(f"pair{k}", pair_groupoid(k)) for k in range(2, 5)]
    entries += [Entry(f"Z{k}", cyclic_group(k)) for k in range(2, 5)]
    entries += [
        Entry("S3", build_standard("sym3")),
        Entry("Z2xZ2", build_standard("product", z2, z2)),
        Entry("Z2_swap", build_standard("cyclic_action", 2, 2, [1, 0])),
        Entry("Z2_on_3", build_standard("cyclic_action", 2, 3, [1, 0, 2])),
        Entry("Z3_on_3", build_standard("cyclic_action", 3, 3, [1, 2, 0])),
        Entry("Z4_on_2", build_standard("cyclic_action", 4, 2, [1, 0])),
        Entry("equiv3", build_standard("equivrel", 3, [[0, 1], [2]])),
        Entry("Z2+pair2", build_standard("union", z2, pair_groupoid(2))),
        Entry("Z2+null1", build_standard("union", z2, null_groupoid(1))),
        Entry("pair2xZ2", build_standard("product", pair_groupoid(2), z2)),
        Entry("Z2_induced2", induce(z2, SetMap(2, 1, (0, 0))).groupoid),
        Entry("pair2_induced3", induce(pair_groupoid(2), SetMap(3, 2, (0, 0, 1))).groupoid),
    ]
    return [e for e in entries if e.groupoid.n_objects <= max_objects]


def small_groupoids(max_objects: int = 3) -> List[Entry]:
    """The catalog groupoids used as functor endpoints."""
    return [e for e in catalog_groupoids(max_objects) if e.groupoid.n_arrows <= SMALL_ARROWS]


def functors_between(
        dom: FiniteGroupoid,
        cod: FiniteGroupoid,
        per_pair: int,
        rng: numpy.random.Generator,
        max_arrows: int = DEFAULT_MAX_ARROWS) -> List[Functor]:
    pool = [
        Functor.from_tables(dom, cod, objects, arrows)
        for objects, arrows in islice(search_functors(dom, cod, max_arrows=max_arrows), SAMPLE_POOL)
    ]
    if len(pool) <= per_pair:
        return pool
    picked = sorted(rng.choice(len(pool), size=per_pair, replace=False).tolist())
    return [pool[i] for i in picked]


def catalog_functors(max_objects: int = 3, seed: int = 7, per_pair: int = 3, max_arrows: int = DEFAULT_MAX_ARROWS) -> List[FunctorEntry]:
    """Functors between small catalog groupoids; sampling depends only on seed."""
    rng = numpy.random.default_rng(seed)
    entries = small_groupoids(max_objects)
    found = []
    for source in entries:
        for target in entries:
            for i, f in enumerate(functors_between(source.groupoid, target.groupoid, per_pair, rng, max_arrows)):
                found.append(FunctorEntry(f"{source.name}->{target.name}#{i}", f))
    return found


def collapse(g: FiniteGroupoid) -> Functor:
    """The unique functor onto the one-arrow groupoid, for connected g."""
    return constant_functor(g, null_groupoid(1), 0)


def morita_morphism(k: int) -> Fraction:
    """(identity, collapse) on pair(k): null(1) ⇢ pair(k)."""
    g = pair_groupoid(k)
    return Fraction(Functor.identity(g), collapse(g))


def s_equivalence_onto(g: FiniteGroupoid, doubled: int = 0, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Functor:
    """Projection of the groupoid induced along the surjection doubling one object."""
    image = tuple(range(g.n_objects)) + (doubled,)
    return induce(g, SetMap(len(image), g.n_objects, image), max_construction_arrows).projection


def meromorphism_pair(
        entry: FunctorEntry,
        seed: int = 7,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Tuple[MeromorphismEntry, Optional[MeromorphismEntry]]:
    """
    γ(f) for a catalog functor, with a second representative obtained by
    precomposing with an s-equivalence that doubles a seeded object of the
    apex; the second one is None when it does not fit under the cap.

    Raises:
        SizeGuardError: γ(f) itself does not fit.
    """
    m = gamma(entry.functor, max_construction_arrows)
    base = MeromorphismEntry(f"gamma({entry.name})", m)
    apex = m.representative.apex
    doubled = int(numpy.random.default_rng([seed, apex.n_objects, apex.n_arrows]).integers(apex.n_objects))
    try:
        lam = s_equivalence_onto(apex, doubled, max_construction_arrows)
    except SizeGuardError:
        return base, None
    twin = MeromorphismEntry(f"gamma({entry.name})*s{doubled}", make_meromorphism(m.representative.precompose(lam)))
    return base, twin


def catalog_meromorphisms(
        functors: List[FunctorEntry],
        seed: int = 7,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> List[Tuple[MeromorphismEntry, Optional[MeromorphismEntry]]]:
    """meromorphism_pair for every catalog functor whose γ fits under the cap."""
    generated = []
    for entry in functors:
        try:
            generated.append(meromorphism_pair(entry, seed, max_construction_arrows))
        except SizeGuardError:
            continue
    return generated
