"""
Functors, embedded subgroupoids and natural transformations, with the
property battery read off the comparison squares of a functor.
"""

from dataclasses import dataclass, fields
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import NotAFunctorError, PreconditionError, guard
from .groupoid import (
    DEFAULT_MAX_ARROWS,
    FiniteGroupoid,
    SetMap,
    ValidationReport,
    Violation,
    assemble,
    classify,
)
from .search import Constraint, component_frames, search_functors


@dataclass(frozen=True, eq=False)
class Functor:
    dom: FiniteGroupoid
    cod: FiniteGroupoid
    f0: SetMap
    f1: SetMap

    @classmethod
    def from_tables(cls, dom: FiniteGroupoid, cod: FiniteGroupoid, objects: Sequence[int], arrows: Sequence[int]) -> "Functor":
        return cls(dom, cod, SetMap(dom.n_objects, cod.n_objects, tuple(objects)), SetMap(dom.n_arrows, cod.n_arrows, tuple(arrows)))

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> "Functor":
        return cls(g, g, SetMap.identity(g.n_objects), SetMap.identity(g.n_arrows))

    def __call__(self, a: int) -> int:
        return self.f1.image[a]

    def obj(self, x: int) -> int:
        return self.f0.image[x]

    def then(self, other: "Functor") -> "Functor":
        """other ∘ self."""
        if not self.cod.same_as(other.dom):
            raise PreconditionError("functors are not composable")
        return Functor(self.dom, other.cod, self.f0.then(other.f0), self.f1.then(other.f1))

    def same_maps(self, other: "Functor") -> bool:
        return self.f0.image == other.f0.image and self.f1.image == other.f1.image

    def __repr__(self):
        return f"Functor({self.dom!r} -> {self.cod!r})"


def compose(g: Functor, f: Functor) -> Functor:
    """g ∘ f."""
    return f.then(g)


def over(p1: Functor, p2: Functor) -> Constraint:
    """Constraint P2 ∘ F = P1 for F: dom(p1) -> dom(p2)."""
    return Constraint(p1.f0.image, p1.f1.image, p2.f0.image, p2.f1.image)


def constant_functor(dom: FiniteGroupoid, cod: FiniteGroupoid, x: int) -> Functor:
    return Functor.from_tables(dom, cod, [x] * dom.n_objects, [cod.unit[x]] * dom.n_arrows)


def validate_functor(f: Functor, max_violations: int = 32) -> ValidationReport:
    """Report-valued functor check; never raises for mathematical failures."""
    violations: List[Violation] = []

    def fail(axiom, detail):
        if len(violations) < max_violations:
            violations.append(Violation(axiom, detail))

    dom, cod = f.dom, f.cod
    if f.f0.domain_size != dom.n_objects or f.f0.codomain_size != cod.n_objects:
        fail("shape", "object map does not match the groupoids")
    if f.f1.domain_size != dom.n_arrows or f.f1.codomain_size != cod.n_arrows:
        fail("shape", "arrow map does not match the groupoids")
    if violations:
        return ValidationReport(tuple(violations))

    for a in dom.arrows:
        fa = f(a)
        if cod.src[fa] != f.obj(dom.src[a]) or cod.tgt[fa] != f.obj(dom.tgt[a]):
            fail("src/tgt not preserved", f"arrow {a} -> {fa}")
    for x in dom.objects:
        if f(dom.unit[x]) != cod.unit[f.obj(x)]:
            fail("units not preserved", f"object {x}")
    if violations:
        return ValidationReport(tuple(violations))

    for a in dom.arrows:
        if f(dom.inv[a]) != cod.inv[f(a)]:
            fail("inverses not preserved", f"arrow {a}")
    for b in dom.arrows:
        for a in dom.outgoing(dom.tgt[b]):
            ab = dom.compose(a, b)
            if f(ab) != cod.compose(f(a), f(b)):
                fail("composition not preserved", f"({a}, {b}, {ab})")
    return ValidationReport(tuple(violations))


def require_functor(f: Functor) -> Functor:
    report = validate_functor(f)
    if not report.ok:
        raise NotAFunctorError(str(report.first))
    return f


# Property battery

@dataclass(frozen=True)
class FunctorProfile:
    i_faithful: bool
    s_full: bool
    inductor: bool
    essentially_surjective: bool
    equivalence: bool
    s_equivalence: bool
    actor: bool
    inactor: bool
    exactor: bool
    s_functor: bool
    s_extensor: bool
    s_exactor: bool
    subactor: bool
    uniferous: bool
    principal_source: bool
    split: Optional[bool] = None

    def names(self) -> Tuple[str, ...]:
        return tuple(item.name for item in fields(self) if getattr(self, item.name) is True)

    def as_dict(self) -> dict:
        return {item.name: getattr(self, item.name) for item in fields(self)}


def analyze_functor(f: Functor, with_split: bool = False, max_arrows: int = DEFAULT_MAX_ARROWS) -> FunctorProfile:
    """
    Evaluate every property flag of f from its comparison maps.

    The T-map x -> (tgt x, src x, f1 x) lands in the triples (b', c', g) with
    g: f0 c' -> f0 b'; the A-map x -> (f1 x, src x) lands in the pairs
    (g, b') with src g = f0 b'.

    Args:
        f: a valid functor.
        with_split: also search for a section; split stays None when the
            search is refused by the size guard.
        max_arrows: cap for that section search.
    """
    dom, cod = f.dom, f.cod
    t_image = {(dom.tgt[x], dom.src[x], f(x)) for x in dom.arrows}
    t_total = sum(len(cod.hom(f.obj(b), f.obj(c))) for b in dom.objects for c in dom.objects)
    i_faithful = len(t_image) == dom.n_arrows
    s_full = len(t_image) == t_total

    a_image = {(f(x), dom.src[x]) for x in dom.arrows}
    a_total = sum(len(cod.outgoing(f.obj(b))) for b in dom.objects)
    inactor = len(a_image) == dom.n_arrows
    exactor = len(a_image) == a_total

    reached = {cod.tgt[g] for b in dom.objects for g in cod.outgoing(f.obj(b))}
    essentially_surjective = len(reached) == cod.n_objects

    inductor = i_faithful and s_full
    equivalence = inductor and essentially_surjective
    s_functor = f.f1.is_surjective

    split = None
    if with_split:
        try:
            split = find_section(f, max_arrows=max_arrows) is not None
        except RuntimeError:
            split = None

    return FunctorProfile(
        i_faithful=i_faithful,
        s_full=s_full,
        inductor=inductor,
        essentially_surjective=essentially_surjective,
        equivalence=equivalence,
        s_equivalence=equivalence and f.f0.is_surjective,
        actor=inactor and exactor,
        inactor=inactor,
        exactor=exactor,
        s_functor=s_functor,
        s_extensor=s_full and s_functor,
        s_exactor=exactor and s_functor,
        subactor=exactor and i_faithful,
        uniferous=dom.n_objects == cod.n_objects and f.f0.image == tuple(range(dom.n_objects)),
        principal_source=classify(dom).principal,
    )


# Subgroupoids

@dataclass(frozen=True, eq=False)
class Subgroupoid:
    """A set of arrows of parent, closed under composition and inverses."""

    parent: FiniteGroupoid
    arrow_set: FrozenSet[int]

    @classmethod
    def generated_by(cls, parent: FiniteGroupoid, arrows: Iterable[int]) -> "Subgroupoid":
        """Smallest uniferous subgroupoid containing arrows."""
        members = set(parent.unit) | set(arrows)
        frontier = list(members)
        while frontier:
            a = frontier.pop()
            new = [parent.inv[a]]
            new += [parent.compose(b, a) for b in parent.outgoing(parent.tgt[a]) if b in members]
            new += [parent.compose(a, b) for b in parent.incoming(parent.src[a]) if b in members]
            for c in new:
                if c not in members:
                    members.add(c)
                    frontier.append(c)
        return cls(parent, frozenset(members))

    @classmethod
    def units(cls, parent: FiniteGroupoid) -> "Subgroupoid":
        return cls(parent, frozenset(parent.unit))

    @classmethod
    def whole(cls, parent: FiniteGroupoid) -> "Subgroupoid":
        return cls(parent, frozenset(parent.arrows))

    @cached_property
    def arrow_ids(self) -> Tuple[int, ...]:
        return tuple(sorted(self.arrow_set))

    def __contains__(self, a: int) -> bool:
        return a in self.arrow_set

    def __len__(self) -> int:
        return len(self.arrow_set)

    @property
    def is_uniferous(self) -> bool:
        return set(self.parent.unit) <= self.arrow_set

    @property
    def is_closed(self) -> bool:
        p = self.parent
        for a in self.arrow_set:
            if p.inv[a] not in self.arrow_set:
                return False
            for b in p.incoming(p.src[a]):
                if b in self.arrow_set and p.compose(a, b) not in self.arrow_set:
                    return False
        return True

    @property
    def is_principal(self) -> bool:
        taus = {self.parent.transitor(a) for a in self.arrow_set}
        return len(taus) == len(self.arrow_set)

    @property
    def is_null(self) -> bool:
        return self.arrow_set <= set(self.parent.unit)

    def same_arrows(self, other: "Subgroupoid") -> bool:
        return self.arrow_set == other.arrow_set

    def double_coset(self, x: int) -> FrozenSet[int]:
        """All n ∘ x ∘ n' with n, n' in this subgroupoid."""
        p = self.parent
        left = {p.compose(n, x) for n in p.outgoing(p.tgt[x]) if n in self.arrow_set}
        return frozenset(p.compose(y, n) for y in left for n in p.incoming(p.src[x]) if n in self.arrow_set)

    @cached_property
    def groupoid(self) -> FiniteGroupoid:
        p = self.parent
        return assemble(
            p.objects, self.arrow_ids,
            src_of=lambda a: p.src[a], tgt_of=lambda a: p.tgt[a],
            mul=p.compose, inv_of=lambda a: p.inv[a], unit_of=lambda x: p.unit[x],
        ).groupoid

    @cached_property
    def inclusion(self) -> Functor:
        return Functor.from_tables(self.groupoid, self.parent, tuple(self.parent.objects), self.arrow_ids)


def kernel(f: Functor) -> Subgroupoid:
    """Arrows sent to units, over the full base of dom(f)."""
    units = f.cod.unit_set
    return Subgroupoid(f.dom, frozenset(x for x in f.dom.arrows if f(x) in units))


# Natural transformations

@dataclass(frozen=True, eq=False)
class NatTransformation:
    """t(x): source.f0(x) -> target.f0(x) for every object x of the common domain."""

    source: Functor
    target: Functor
    components: Tuple[int, ...]

    def is_natural(self) -> bool:
        f, g, t = self.source, self.target, self.components
        cod = f.cod
        for x in f.dom.objects:
            if cod.src[t[x]] != f.obj(x) or cod.tgt[t[x]] != g.obj(x):
                return False
        return all(
            cod.compose(t[f.dom.tgt[a]], f(a)) == cod.compose(g(a), t[f.dom.src[a]])
            for a in f.dom.arrows
        )

    def inverse(self) -> "NatTransformation":
        return NatTransformation(self.target, self.source, tuple(self.source.cod.inv[c] for c in self.components))


def naturally_isomorphic(f: Functor, g: Functor, max_arrows: int = DEFAULT_MAX_ARROWS) -> Optional[NatTransformation]:
    """
    First natural isomorphism f => g, component by component.

    The component at an orbit's lowest object r is tried in increasing id
    order; the rest of the orbit follows from t(b) = g(θ_b) t(r) f(θ_b)⁻¹.

    Raises:
        PreconditionError: f and g do not share domain and codomain.
        SizeGuardError: past max_arrows.
    """
    if not (f.dom.same_as(g.dom) and f.cod.same_as(g.cod)):
        raise PreconditionError("natural transformations need parallel functors")
    dom, cod = f.dom, f.cod
    guard("domain", dom.n_arrows, max_arrows)
    guard("codomain", cod.n_arrows, max_arrows)

    components = [0] * dom.n_objects
    for frame in component_frames(dom):
        rep = frame.representative
        found = False
        for t_rep in cod.hom(g.obj(rep), f.obj(rep)):
            local = {b: cod.compose_all(g(frame.theta[b]), t_rep, cod.inv[f(frame.theta[b])]) for b in frame.members}
            if all(cod.compose(local[dom.tgt[a]], f(a)) == cod.compose(g(a), local[dom.src[a]]) for a in frame.arrows):
                for b, c in local.items():
                    components[b] = c
                found = True
                break
        if not found:
            return None
    return NatTransformation(f, g, tuple(components))


def whisker_left(t: NatTransformation, h: Functor) -> NatTransformation:
    """t ∘ h: f∘h => g∘h."""
    return NatTransformation(h.then(t.source), h.then(t.target), tuple(t.components[h.obj(x)] for x in h.dom.objects))


def whisker_right(k: Functor, t: NatTransformation) -> NatTransformation:
    """k ∘ t: k∘f => k∘g."""
    return NatTransformation(t.source.then(k), t.target.then(k), tuple(k(c) for c in t.components))


def compose_vertical(u: NatTransformation, t: NatTransformation) -> NatTransformation:
    """u · t: f => h for t: f => g and u: g => h."""
    cod = t.source.cod
    return NatTransformation(t.source, u.target, tuple(cod.compose(b, a) for a, b in zip(t.components, u.components)))


def compose_transformations(s: NatTransformation, t: NatTransformation) -> NatTransformation:
    """Horizontal composite s * t: k∘f => l∘g for t: f => g and s: k => l."""
    return compose_vertical(whisker_left(s, t.target), whisker_right(s.source, t))


# Sections, descent and holomorphism classes

def find_section(f: Functor, max_arrows: int = DEFAULT_MAX_ARROWS) -> Optional[Functor]:
    """First functor s: cod -> dom with f ∘ s = id, or None."""
    identity = Functor.identity(f.cod)
    found = next(search_functors(f.cod, f.dom, constraints=[over(identity, f)], max_arrows=max_arrows), None)
    if found is None:
        return None
    return Functor.from_tables(f.cod, f.dom, *found)


def descend(e: Functor, c: Functor) -> Functor:
    """
    The functor h with h ∘ e = c, for e surjective on objects and arrows.

    Raises:
        PreconditionError: e is not an s-functor onto its codomain objects, or
            c is not constant on the fibres of e.
        NotAFunctorError: the descended maps fail the functor laws.
    """
    if not (e.f0.is_surjective and e.f1.is_surjective):
        raise PreconditionError("descent needs a functor surjective on objects and arrows")
    if not e.dom.same_as(c.dom):
        raise PreconditionError("descent needs functors with a common domain")
    objects = [-1] * e.cod.n_objects
    arrows = [-1] * e.cod.n_arrows
    for x in e.dom.objects:
        y = e.obj(x)
        if objects[y] not in (-1, c.obj(x)):
            raise PreconditionError(f"not constant on the fibre over object {y}")
        objects[y] = c.obj(x)
    for a in e.dom.arrows:
        y = e(a)
        if arrows[y] not in (-1, c(a)):
            raise PreconditionError(f"not constant on the fibre over arrow {y}")
        arrows[y] = c(a)
    return require_functor(Functor.from_tables(e.cod, c.cod, objects, arrows))


def enumerate_functors(dom: FiniteGroupoid, cod: FiniteGroupoid, limit: Optional[int] = None, max_arrows: int = DEFAULT_MAX_ARROWS) -> List[Functor]:
    found = []
    for objects, arrows in search_functors(dom, cod, max_arrows=max_arrows):
        found.append(Functor.from_tables(dom, cod, objects, arrows))
        if limit is not None and len(found) >= limit:
            break
    return found


def holomorphism_classes(h: FiniteGroupoid, g: FiniteGroupoid, max_arrows: int = DEFAULT_MAX_ARROWS) -> List[Functor]:
    """One representative per natural-isomorphism class of functors h -> g, first found first."""
    representatives: List[Functor] = []
    for f in enumerate_functors(h, g, max_arrows=max_arrows):
        if not any(naturally_isomorphic(r, f, max_arrows=max_arrows) for r in representatives):
            representatives.append(f)
    return representatives
