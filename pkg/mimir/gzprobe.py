"""
Probes of the two calculus-of-fractions conditions for s-equivalences: the
pullback completion (C*) and the equalizing condition (d*).
"""

from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple

from .build import fibred_product, induce
from .errors import PreconditionError, SizeGuardError
from .functor import Functor, analyze_functor
from .groupoid import DEFAULT_MAX_ARROWS, DEFAULT_MAX_CONSTRUCTION_ARROWS, FiniteGroupoid, SetMap

FOUND = "found"
NOT_FOUND = "not found"
INCONCLUSIVE = "inconclusive"
HOLDS = "holds"
FAILS = "fails"


@dataclass(frozen=True)
class GzReport:
    kind: str
    outcome: str
    cap: int
    detail: str = ""
    witness: Optional[Functor] = field(default=None, compare=False)


def cstar_probe(f: Functor, s: Functor, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> GzReport:
    """
    Complete f: X -> B and the s-equivalence s: Y -> B into a pullback square
    and check that the new side s': X ×_B Y -> X is again an s-equivalence.
    """
    if not analyze_functor(s).s_equivalence:
        raise PreconditionError("cstar needs an s-equivalence")
    try:
        square = fibred_product(f, s, max_construction_arrows)
    except SizeGuardError as e:
        return GzReport("cstar", INCONCLUSIVE, max_construction_arrows, str(e))
    s_prime = square.left
    holds = analyze_functor(s_prime).s_equivalence
    detail = f"pullback has {square.groupoid.n_objects} objects, {square.groupoid.n_arrows} arrows"
    return GzReport("cstar", HOLDS if holds else FAILS, max_construction_arrows, detail, s_prime)


def fibre_profiles(n_objects: int, total: int) -> Iterator[Tuple[int, ...]]:
    """Fibre sizes (each >= 1) of surjections onto n_objects points from total points."""
    if n_objects == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - n_objects + 2):
        for rest in fibre_profiles(n_objects - 1, total - first):
            yield (first,) + rest


def _surjection(profile: Tuple[int, ...]) -> SetMap:
    image = tuple(x for x, size in enumerate(profile) for _ in range(size))
    return SetMap(len(image), len(profile), image)


def _induced_size(a: FiniteGroupoid, profile: Tuple[int, ...]) -> int:
    return sum(
        profile[t] * profile[s] * len(a.hom(t, s))
        for t in a.objects for s in a.objects
    )


def dstar_probe(f: Functor, g: Functor, s: Functor, max_arrows: int = DEFAULT_MAX_ARROWS) -> GzReport:
    """
    Look for an s-equivalence λ: D -> A with f ∘ λ = g ∘ λ, for parallel
    f, g: A -> B with s ∘ f = s ∘ g.

    Every s-equivalence onto A is isomorphic over A to the projection of an
    induced groupoid along a surjection onto objects(A), and that groupoid
    depends only on the fibre sizes; the search runs through fibre profiles
    while the induced groupoid has at most max_arrows arrows. Exhausting them
    reports "not found" with the cap; if not even the smallest fits,
    "inconclusive".
    """
    if not (f.dom.same_as(g.dom) and f.cod.same_as(g.cod)):
        raise PreconditionError("dstar needs parallel functors")
    if not analyze_functor(s).s_equivalence:
        raise PreconditionError("dstar needs an s-equivalence")
    if not f.then(s).same_maps(g.then(s)):
        raise PreconditionError("dstar needs s ∘ f = s ∘ g")

    a = f.dom
    total = a.n_objects
    searched = 0
    while True:
        profiles = [p for p in fibre_profiles(a.n_objects, total) if _induced_size(a, p) <= max_arrows]
        if not profiles:
            break
        for profile in profiles:
            lam = induce(a, _surjection(profile), max_arrows).projection
            searched += 1
            if lam.then(f).same_maps(lam.then(g)):
                return GzReport("dstar", FOUND, max_arrows, f"fibre sizes {list(profile)}", lam)
        total += 1
        if a.n_objects == 0:
            break

    if searched == 0:
        return GzReport("dstar", INCONCLUSIVE, max_arrows, "no candidate fits under the cap")
    return GzReport("dstar", NOT_FOUND, max_arrows, f"exhausted {searched} candidates up to the cap")


def gz_probe(
        kind: str,
        *data: Functor,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> GzReport:
    """gz_probe("cstar", f, s) or gz_probe("dstar", f, g, s)."""
    if kind == "cstar":
        return cstar_probe(*data, max_construction_arrows=max_construction_arrows)
    if kind == "dstar":
        return dstar_probe(*data, max_arrows=max_arrows)
    raise PreconditionError(f"unknown probe '{kind}'")
