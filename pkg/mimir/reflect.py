"""
Reflection onto plurigroups.

For finite groupoids the fundamental plurigroup is the skeleton: one object
per orbit with that orbit's vertex group. Its unit γ(retraction) is always a
meriedric equivalence here, so the content of the reflection is the canonical
choice of representative; reports carry that as the collapse flag.
"""

from dataclasses import dataclass
from typing import List, Optional

from .build import skeleton
from .errors import PreconditionError
from .fraction import (
    Meromorphism,
    compose_meromorphisms,
    fractions_equivalent,
    gamma,
    is_holomorphism,
    is_meriedric_equivalence,
    meromorphisms_equal,
)
from .functor import Functor, enumerate_functors, naturally_isomorphic
from .groupoid import DEFAULT_MAX_ARROWS, DEFAULT_MAX_CONSTRUCTION_ARROWS, FiniteGroupoid, classify


@dataclass(frozen=True)
class Reflection:
    plurigroup: FiniteGroupoid
    retraction: Functor
    inclusion: Functor
    unit: Meromorphism


def fundamental_plurigroup(g: FiniteGroupoid, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Reflection:
    frame = skeleton(g)
    return Reflection(frame.plurigroup, frame.retraction, frame.inclusion, gamma(frame.retraction, max_construction_arrows))


def factors_back(
        reflection: Reflection,
        factor: Meromorphism,
        m: Meromorphism,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> bool:
    """factor ∘ unit = m."""
    back = compose_meromorphisms(factor, reflection.unit, max_construction_arrows=max_construction_arrows)
    return meromorphisms_equal(back, m, max_arrows=max_arrows)


@dataclass(frozen=True)
class ReflectionReport:
    factorization: Optional[Meromorphism]
    functor: Optional[Functor]
    candidates: int
    classes: int
    collapse: bool
    factors_back: bool

    @property
    def exists(self) -> bool:
        return self.functor is not None and self.factors_back

    @property
    def unique(self) -> bool:
        return self.classes == 1


def check_reflection_universal(
        g: FiniteGroupoid,
        d: FiniteGroupoid,
        m: Meromorphism,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> ReflectionReport:
    """
    Factor m: g ⇢ d through the unit g ⇢ Π(g).

    The factor is m ∘ γ(inclusion), exhibited as a holomorphism φ: Π(g) -> d.
    Uniqueness is checked over every functor φ with γ(φ ∘ retraction) ~ m,
    counted up to natural isomorphism.

    Raises:
        PreconditionError: d is not a plurigroup, or m does not go from g to d.
    """
    if not classify(d).plurigroup:
        raise PreconditionError("reflection target must be a plurigroup")
    if not (m.source.same_as(g) and m.target.same_as(d)):
        raise PreconditionError("meromorphism must go from g to d")

    reflection = fundamental_plurigroup(g, max_construction_arrows)
    factor = compose_meromorphisms(m, gamma(reflection.inclusion, max_construction_arrows), max_construction_arrows=max_construction_arrows)
    functor = is_holomorphism(factor, max_arrows=max_arrows)

    matching: List[Functor] = []
    for phi in enumerate_functors(reflection.plurigroup, d, max_arrows=max_arrows):
        candidate = gamma(reflection.retraction.then(phi), max_construction_arrows)
        if fractions_equivalent(candidate.reduced, m.reduced, max_arrows=max_arrows, max_construction_arrows=max_construction_arrows):
            matching.append(phi)
    classes: List[Functor] = []
    for phi in matching:
        if not any(naturally_isomorphic(c, phi, max_arrows=max_arrows) for c in classes):
            classes.append(phi)

    return ReflectionReport(
        factorization=factor,
        functor=functor,
        candidates=len(matching),
        classes=len(classes),
        collapse=is_meriedric_equivalence(reflection.unit),
        factors_back=factors_back(reflection, factor, m, max_arrows, max_construction_arrows),
    )
