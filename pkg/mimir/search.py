"""
Deterministic functor search between finite groupoids.

A functor out of a connected component is fixed by three choices: the image of
the component's lowest object r, a homomorphism of the vertex group at r, and
the image of one connecting arrow θ_b: r -> b per other object b. Every other
arrow x: b -> c then goes to F(θ_c) F(θ_c⁻¹ x θ_b) F(θ_b)⁻¹. Searching these
choices instead of raw arrow maps keeps desk-scale searches fast and the
enumeration order canonical.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import guard
from .groupoid import (
    DEFAULT_MAX_ARROWS,
    FiniteGroupoid,
    SetMap,
    connecting_arrow,
    element_order,
    orbits_and_vertex_groups,
)


@dataclass(frozen=True)
class Constraint:
    """
    Require P2 ∘ F = P1 for the searched F: dom -> cod.

    P1 maps dom into some groupoid X, P2 maps cod into the same X; both are
    given as object and arrow tables.
    """

    source_objects: Tuple[int, ...]
    source_arrows: Tuple[int, ...]
    target_objects: Tuple[int, ...]
    target_arrows: Tuple[int, ...]


@dataclass(frozen=True)
class ComponentFrame:
    representative: int
    members: Tuple[int, ...]
    arrows: Tuple[int, ...]
    theta: Dict[int, int]
    loops: Tuple[int, ...]
    generators: Tuple[int, ...]


def subgroup_closure(g: FiniteGroupoid, generators: Sequence[int], identity: int) -> FrozenSet[int]:
    """Elements generated by loops at one object."""
    elements = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for s in generators:
            y = g.compose(s, x)
            if y not in elements:
                elements.add(y)
                frontier.append(y)
    return frozenset(elements)


def greedy_generators(g: FiniteGroupoid, loops: Sequence[int], identity: int) -> Tuple[int, ...]:
    """Pick generators by increasing id until they generate every loop."""
    generators: List[int] = []
    closure = frozenset([identity])
    for a in loops:
        if a not in closure:
            generators.append(a)
            closure = subgroup_closure(g, generators, identity)
    return tuple(generators)


def component_frames(g: FiniteGroupoid) -> Tuple[ComponentFrame, ...]:
    decomposition = orbits_and_vertex_groups(g)
    frames = []
    for index, (orbit, rep) in enumerate(zip(decomposition.orbits, decomposition.representatives)):
        theta = {b: connecting_arrow(g, rep, b) for b in orbit if b != rep}
        theta[rep] = g.unit[rep]
        loops = g.loops(rep)
        frames.append(ComponentFrame(
            representative=rep,
            members=orbit,
            arrows=tuple(a for a in g.arrows if decomposition.orbit_of[g.src[a]] == index),
            theta=theta,
            loops=loops,
            generators=greedy_generators(g, loops, g.unit[rep]),
        ))
    return tuple(frames)


def vertex_part(g: FiniteGroupoid, frame: ComponentFrame, x: int) -> int:
    """θ_c⁻¹ ∘ x ∘ θ_b for x: b -> c, a loop at the representative."""
    return g.compose_all(g.inv[frame.theta[g.tgt[x]]], x, frame.theta[g.src[x]])


def _extend_homomorphism(
        g: FiniteGroupoid,
        generators: Sequence[int],
        identity: int,
        h: FiniteGroupoid,
        target_identity: int,
        images: Sequence[int]) -> Optional[Dict[int, int]]:
    phi = {identity: target_identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for s, t in zip(generators, images):
            y = g.compose(s, x)
            z = h.compose(t, phi[x])
            known = phi.get(y)
            if known is None:
                phi[y] = z
                frontier.append(y)
            elif known != z:
                return None
    return phi


def vertex_homomorphisms(
        g: FiniteGroupoid,
        frame: ComponentFrame,
        h: FiniteGroupoid,
        target: int,
        constraints: Sequence[Constraint] = (),
        bijective: bool = False) -> Iterator[Dict[int, int]]:
    """Homomorphisms from the vertex group of frame into the loops of h at target."""
    target_loops = h.loops(target)
    if bijective and len(target_loops) != len(frame.loops):
        return
    target_orders = {t: element_order(h, t) for t in target_loops}
    candidates = []
    for s in frame.generators:
        order = element_order(g, s)
        options = [
            t for t in target_loops
            if (target_orders[t] == order if bijective else order % target_orders[t] == 0)
            and all(c.target_arrows[t] == c.source_arrows[s] for c in constraints)
        ]
        if not options:
            return
        candidates.append(options)

    def assign(i: int, chosen: List[int]) -> Iterator[Dict[int, int]]:
        if i == len(candidates):
            phi = _extend_homomorphism(g, frame.generators, g.unit[frame.representative], h, h.unit[target], chosen)
            if phi is None:
                return
            if bijective and len(set(phi.values())) != len(phi):
                return
            if any(c.target_arrows[y] != c.source_arrows[x] for c in constraints for x, y in phi.items()):
                return
            yield phi
            return
        for t in candidates[i]:
            chosen.append(t)
            yield from assign(i + 1, chosen)
            chosen.pop()

    yield from assign(0, [])


def _component_maps(
        g: FiniteGroupoid,
        h: FiniteGroupoid,
        frame: ComponentFrame,
        constraints: Sequence[Constraint],
        bijective: bool,
        used: FrozenSet[int]) -> Iterator[Tuple[Dict[int, int], Dict[int, int], FrozenSet[int]]]:
    rep = frame.representative
    others = [b for b in frame.members if b != rep]
    for r2 in h.objects:
        if bijective and r2 in used:
            continue
        if any(c.target_objects[r2] != c.source_objects[rep] for c in constraints):
            continue
        for phi in vertex_homomorphisms(g, frame, h, r2, constraints, bijective):
            lifts = {rep: h.unit[r2]}
            placed = {r2}

            def place(i: int) -> Iterator[Dict[int, int]]:
                if i == len(others):
                    yield lifts
                    return
                b = others[i]
                theta = frame.theta[b]
                for k in h.outgoing(r2):
                    if bijective and h.tgt[k] in placed | used:
                        continue
                    if any(c.target_arrows[k] != c.source_arrows[theta] for c in constraints):
                        continue
                    lifts[b] = k
                    placed.add(h.tgt[k])
                    yield from place(i + 1)
                    placed.discard(h.tgt[k])
                    del lifts[b]

            for chosen in place(0):
                objects = {b: h.tgt[chosen[b]] for b in frame.members}
                arrows = {
                    x: h.compose_all(chosen[g.tgt[x]], phi[vertex_part(g, frame, x)], h.inv[chosen[g.src[x]]])
                    for x in frame.arrows
                }
                yield objects, arrows, frozenset(objects.values())


def search_functors(
        dom: FiniteGroupoid,
        cod: FiniteGroupoid,
        constraints: Sequence[Constraint] = (),
        bijective: bool = False,
        max_arrows: int = DEFAULT_MAX_ARROWS) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Enumerate functors dom -> cod as (object table, arrow table).

    Args:
        dom: the domain groupoid.
        cod: the codomain groupoid.
        constraints: every yielded F satisfies P2 ∘ F = P1 for each constraint.
        bijective: only yield isomorphisms.
        max_arrows: size guard on both groupoids.

    Raises:
        SizeGuardError: when either groupoid has more than max_arrows arrows.
    """
    guard("domain", dom.n_arrows, max_arrows)
    guard("codomain", cod.n_arrows, max_arrows)
    if bijective and (dom.n_objects != cod.n_objects or dom.n_arrows != cod.n_arrows):
        return
    frames = component_frames(dom)
    if not bijective:
        for frame in frames:
            if next(_component_maps(dom, cod, frame, constraints, False, frozenset()), None) is None:
                return

    f0 = [0] * dom.n_objects
    f1 = [0] * dom.n_arrows

    def walk(i: int, used: FrozenSet[int]):
        if i == len(frames):
            yield tuple(f0), tuple(f1)
            return
        for objects, arrows, placed in _component_maps(dom, cod, frames[i], constraints, bijective, used):
            for b, y in objects.items():
                f0[b] = y
            for x, y in arrows.items():
                f1[x] = y
            yield from walk(i + 1, used | placed)

    yield from walk(0, frozenset())


def find_isomorphism(
        g: FiniteGroupoid,
        h: FiniteGroupoid,
        max_arrows: int = DEFAULT_MAX_ARROWS) -> Optional[Tuple[SetMap, SetMap]]:
    """
    First isomorphism g -> h in the canonical search order.

    Returns:
        (object bijection, arrow bijection), or None when g and h are not isomorphic.

    Raises:
        SizeGuardError: past max_arrows.
    """
    found = next(search_functors(g, h, bijective=True, max_arrows=max_arrows), None)
    if found is None:
        return None
    objects, arrows = found
    return SetMap(g.n_objects, h.n_objects, objects), SetMap(g.n_arrows, h.n_arrows, arrows)


def are_isomorphic(g: FiniteGroupoid, h: FiniteGroupoid, max_arrows: int = DEFAULT_MAX_ARROWS) -> bool:
    return find_isomorphism(g, h, max_arrows=max_arrows) is not None
