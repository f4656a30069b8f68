"""Orbital atlases: a groupoid with a surjection of its base whose fibres are the orbits."""

from dataclasses import dataclass
from typing import Optional

from .build import Induced, induce
from .errors import PreconditionError
from .fraction import Meromorphism, compose_meromorphisms, gamma, invert_meromorphism
from .functor import Functor, over
from .groupoid import DEFAULT_MAX_ARROWS, DEFAULT_MAX_CONSTRUCTION_ARROWS, FiniteGroupoid, SetMap, orbits_and_vertex_groups, pair_groupoid
from .search import search_functors


@dataclass(frozen=True)
class OrbitalAtlas:
    groupoid: FiniteGroupoid
    orbit_space_size: int
    quotient: SetMap

    def is_valid(self) -> bool:
        """Fibres of the quotient map are exactly the orbits."""
        if not self.quotient.is_surjective or self.quotient.domain_size != self.groupoid.n_objects:
            return False
        orbits = set(orbits_and_vertex_groups(self.groupoid).orbits)
        fibres = {self.quotient.preimage(y) for y in range(self.orbit_space_size)}
        return orbits == fibres


def orbital_atlas(g: FiniteGroupoid) -> OrbitalAtlas:
    """The atlas of g over its own orbit space, orbits numbered by least object."""
    decomposition = orbits_and_vertex_groups(g)
    return OrbitalAtlas(g, decomposition.count, SetMap(g.n_objects, decomposition.count, decomposition.orbit_of))


def refine_atlas(a: OrbitalAtlas, u: SetMap, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> OrbitalAtlas:
    """
    Pull an atlas back along a surjection u onto its base.

    Raises:
        PreconditionError: u is not a surjection onto objects(a.groupoid).
    """
    if u.codomain_size != a.groupoid.n_objects or not u.is_surjective:
        raise PreconditionError("refinement needs a surjection onto the base")
    induced = induce(a.groupoid, u, max_construction_arrows)
    return OrbitalAtlas(induced.groupoid, a.orbit_space_size, u.then(a.quotient))


def _transitor_functor(g: FiniteGroupoid, pairs: FiniteGroupoid) -> Functor:
    n = g.n_objects
    return Functor.from_tables(g, pairs, range(n), [g.tgt[x] * n + g.src[x] for x in g.arrows])


@dataclass(frozen=True)
class CommonRefinement:
    """
    Induced groupoids of both atlases over E = {(x1, x2) : q1 x1 = q2 x2},
    with an isomorphism between them fixing E.
    """

    first: Induced
    second: Induced
    isomorphism: Functor


def common_refinement(
        a1: OrbitalAtlas,
        a2: OrbitalAtlas,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Optional[CommonRefinement]:
    if a1.orbit_space_size != a2.orbit_space_size:
        return None
    pairs = [
        (x1, x2)
        for x1 in a1.groupoid.objects for x2 in a2.groupoid.objects
        if a1.quotient(x1) == a2.quotient(x2)
    ]
    u1 = SetMap(len(pairs), a1.groupoid.n_objects, tuple(x1 for x1, _ in pairs))
    u2 = SetMap(len(pairs), a2.groupoid.n_objects, tuple(x2 for _, x2 in pairs))
    r1 = induce(a1.groupoid, u1, max_construction_arrows)
    r2 = induce(a2.groupoid, u2, max_construction_arrows)

    banal = pair_groupoid(len(pairs))
    constraint = over(_transitor_functor(r1.groupoid, banal), _transitor_functor(r2.groupoid, banal))
    found = next(search_functors(r1.groupoid, r2.groupoid, constraints=[constraint], bijective=True, max_arrows=max_arrows), None)
    if found is None:
        return None
    return CommonRefinement(r1, r2, Functor.from_tables(r1.groupoid, r2.groupoid, *found))


def atlases_equivalent(
        a1: OrbitalAtlas,
        a2: OrbitalAtlas,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> bool:
    """Two atlases of the same orbit space are equivalent when they have a common refinement."""
    return common_refinement(a1, a2, max_arrows, max_construction_arrows) is not None


def atlas_isomorphism(
        a1: OrbitalAtlas,
        a2: OrbitalAtlas,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Optional[Meromorphism]:
    """
    The meriedric equivalence G1 ⇢ G2 read off a common refinement, going up
    the first projection and down the second; None for inequivalent atlases.
    """
    found = common_refinement(a1, a2, max_arrows, max_construction_arrows)
    if found is None:
        return None
    up = invert_meromorphism(gamma(found.first.projection, max_construction_arrows))
    down = gamma(found.isomorphism.then(found.second.projection), max_construction_arrows)
    return compose_meromorphisms(down, up, max_construction_arrows=max_construction_arrows)
