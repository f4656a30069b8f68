"""
Transversal and transverse pairs of subgroupoids, cotransversality of two
exactors and the butterfly diagram attached to them.

Kernels are named N = Ker p and R = Ker q throughout.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from .errors import PreconditionError, SizeGuardError, guard
from .functor import Functor, Subgroupoid, analyze_functor, kernel
from .groupoid import DEFAULT_MAX_ARROWS, FiniteGroupoid


class Transversality(str, Enum):
    NONE = "none"
    TRANSVERSAL = "transversal"
    TRANSVERSE = "transverse"


class Cotransversality(str, Enum):
    NONE = "none"
    COTRANSVERSAL = "cotransversal"
    COTRANSVERSE = "cotransverse"


_DUAL = {
    Transversality.NONE: Cotransversality.NONE,
    Transversality.TRANSVERSAL: Cotransversality.COTRANSVERSAL,
    Transversality.TRANSVERSE: Cotransversality.COTRANSVERSE,
}


def intersect_subgroupoids(m: Subgroupoid, n: Subgroupoid) -> Subgroupoid:
    """M ∩ N; principal when either side is."""
    if not m.parent.same_as(n.parent):
        raise PreconditionError("subgroupoids of different groupoids")
    s = Subgroupoid(m.parent, m.arrow_set & n.arrow_set)
    if (m.is_principal or n.is_principal) and not s.is_principal:
        raise RuntimeError("intersection with a principal subgroupoid is not principal")
    return s


def transversality_status(k: FiniteGroupoid, m: Subgroupoid, n: Subgroupoid) -> Transversality:
    """
    Status of the divisor (x, y) -> x y⁻¹ on same-source pairs of m × n:
    surjective onto k is transversal, bijective is transverse.
    """
    pairs = 0
    image = set()
    for y in n.arrow_ids:
        for x in k.outgoing(k.src[y]):
            if x in m:
                pairs += 1
                image.add(k.divisor(x, y))
    if len(image) < k.n_arrows:
        return Transversality.NONE
    return Transversality.TRANSVERSE if pairs == k.n_arrows else Transversality.TRANSVERSAL


@dataclass(frozen=True)
class Butterfly:
    """
    Apex K with exactors p: K -> G and q: K -> H, kernels N and R, their
    intersection S, inclusions j: N -> K and i: R -> K, and legs
    u = p ∘ i: R -> G, v = q ∘ j: N -> H.
    """

    apex: FiniteGroupoid
    p: Functor
    q: Functor
    n: Subgroupoid
    r: Subgroupoid
    s: Subgroupoid
    i: Functor
    j: Functor
    u: Functor
    v: Functor


def butterfly(p: Functor, q: Functor) -> Butterfly:
    if not p.dom.same_as(q.dom):
        raise PreconditionError("butterfly needs functors with a common source")
    n, r = kernel(p), kernel(q)
    i, j = r.inclusion, n.inclusion
    return Butterfly(p.dom, p, q, n, r, intersect_subgroupoids(n, r), i, j, i.then(p), j.then(q))


@dataclass(frozen=True)
class CotransversalityReport:
    status: Cotransversality
    via_kernels: Cotransversality
    via_legs: Cotransversality
    butterfly: Butterfly

    @property
    def agree(self) -> bool:
        return self.via_kernels == self.via_legs


def cotransversality(p: Functor, q: Functor) -> CotransversalityReport:
    """
    Cotransversality of two exactors, computed twice: from R ⋔/⊤ N in K, and
    from the legs u, v being exactors/actors.

    Raises:
        PreconditionError: p or q is not an exactor.
        RuntimeError: the two computations disagree.
    """
    if not (analyze_functor(p).exactor and analyze_functor(q).exactor):
        raise PreconditionError("cotransversality needs two exactors")
    diagram = butterfly(p, q)
    via_kernels = _DUAL[transversality_status(diagram.apex, diagram.r, diagram.n)]
    u, v = analyze_functor(diagram.u), analyze_functor(diagram.v)
    if u.actor and v.actor:
        via_legs = Cotransversality.COTRANSVERSE
    elif u.exactor and v.exactor:
        via_legs = Cotransversality.COTRANSVERSAL
    else:
        via_legs = Cotransversality.NONE
    if via_kernels != via_legs:
        raise RuntimeError(f"cotransversality disagrees: kernels say {via_kernels.value}, legs say {via_legs.value}")
    return CotransversalityReport(via_kernels, via_kernels, via_legs, diagram)


def uniferous_subgroupoids(k: FiniteGroupoid, max_arrows: int = DEFAULT_MAX_ARROWS, max_count: int = 4096) -> List[Subgroupoid]:
    """Every uniferous subgroupoid of k, smallest first, ties by sorted arrow ids."""
    guard("groupoid", k.n_arrows, max_arrows)
    start = Subgroupoid.units(k)
    seen = {start.arrow_set: start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for a in k.arrows:
            if a in current:
                continue
            grown = Subgroupoid.generated_by(k, current.arrow_set | {a})
            if grown.arrow_set not in seen:
                seen[grown.arrow_set] = grown
                frontier.append(grown)
                if len(seen) > max_count:
                    raise SizeGuardError("subgroupoid lattice", len(seen), max_count)
    return sorted(seen.values(), key=lambda s: (len(s), s.arrow_ids))


def inessential_witness(p: Functor, max_arrows: int = DEFAULT_MAX_ARROWS) -> Optional[Subgroupoid]:
    """
    A uniferous subgroupoid M with M ⊤ Ker p, or None.

    For surjective homomorphisms of groups this holds exactly when p splits.
    """
    if not analyze_functor(p).exactor:
        raise PreconditionError("inessential is defined for exactors")
    n = kernel(p)
    for m in uniferous_subgroupoids(p.dom, max_arrows=max_arrows):
        if transversality_status(p.dom, m, n) is Transversality.TRANSVERSE:
            return m
    return None
