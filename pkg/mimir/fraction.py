"""
Fractions p/q, meromorphisms and the simplified calculus of fractions.

A fraction is a pair of functors p: K -> G (numerator) and q: K -> H
(denominator) with a common apex K; it goes from H to G. A meromorphism is a
fraction of exactors with q an s-equivalence and (p, q) cotransversal; it is
stored with its reduction, the unique irreducible representative, which serves
as the canonical form.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .build import fibred_product, holograph, pairing, quotient_by_principal, skeleton
from .errors import NotAMeromorphismError, PreconditionError
from .functor import Functor, FunctorProfile, analyze_functor, descend, find_section, over
from .groupoid import (
    DEFAULT_MAX_ARROWS,
    DEFAULT_MAX_CONSTRUCTION_ARROWS,
    FiniteGroupoid,
    orbits_and_vertex_groups,
    product,
)
from .search import are_isomorphic, find_isomorphism, search_functors
from .transversal import (
    Butterfly,
    Cotransversality,
    Transversality,
    butterfly,
    cotransversality,
    transversality_status,
)


@dataclass(frozen=True, eq=False)
class Fraction:
    p: Functor
    q: Functor

    def __post_init__(self):
        if not self.p.dom.same_as(self.q.dom):
            raise PreconditionError("numerator and denominator need a common apex")

    @property
    def apex(self) -> FiniteGroupoid:
        return self.p.dom

    @property
    def source(self) -> FiniteGroupoid:
        return self.q.cod

    @property
    def target(self) -> FiniteGroupoid:
        return self.p.cod

    def swapped(self) -> "Fraction":
        return Fraction(self.q, self.p)

    def precompose(self, k: Functor) -> "Fraction":
        """(p ∘ k, q ∘ k)."""
        return Fraction(k.then(self.p), k.then(self.q))


@dataclass(frozen=True)
class MeromorphismReport:
    p_profile: FunctorProfile
    q_profile: FunctorProfile
    cotransversal: Cotransversality
    butterfly: Butterfly
    r_principal: bool
    v_s_exactor: bool

    @property
    def is_fraction_of_exactors(self) -> bool:
        return self.p_profile.exactor and self.q_profile.exactor

    @property
    def q_is_s_equivalence(self) -> bool:
        return self.q_profile.s_equivalence

    @property
    def ok(self) -> bool:
        return self.is_fraction_of_exactors and self.q_is_s_equivalence and self.cotransversal is not Cotransversality.NONE

    def failures(self) -> List[str]:
        failed = []
        if not self.is_fraction_of_exactors:
            failed.append("not a fraction of exactors")
        if not self.q_is_s_equivalence:
            failed.append("denominator is not an s-equivalence")
        if self.cotransversal is Cotransversality.NONE:
            failed.append("numerator and denominator are not cotransversal")
        return failed


def check_meromorphism(fr: Fraction) -> MeromorphismReport:
    """Report-valued check of the meromorphism conditions; never raises for failures."""
    p_profile, q_profile = analyze_functor(fr.p), analyze_functor(fr.q)
    if p_profile.exactor and q_profile.exactor:
        report = cotransversality(fr.p, fr.q)
        status, diagram = report.status, report.butterfly
    else:
        status, diagram = Cotransversality.NONE, butterfly(fr.p, fr.q)
    return MeromorphismReport(
        p_profile=p_profile,
        q_profile=q_profile,
        cotransversal=status,
        butterfly=diagram,
        r_principal=diagram.r.is_principal,
        v_s_exactor=analyze_functor(diagram.v).s_exactor,
    )


def _require_meromorphism(fr: Fraction) -> MeromorphismReport:
    report = check_meromorphism(fr)
    if not report.ok:
        raise NotAMeromorphismError("; ".join(report.failures()))
    return report


# Irreducibility and reduction

@dataclass(frozen=True)
class IrreducibilityReport:
    s_null: bool
    n_transverse_r: bool
    cotransverse: bool
    u_actor: bool
    v_actor: bool
    terminal: Optional[bool] = None

    @property
    def conditions(self) -> tuple:
        return self.s_null, self.n_transverse_r, self.cotransverse, self.u_actor, self.v_actor

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions)) == 1

    @property
    def irreducible(self) -> bool:
        return all(self.conditions) and self.terminal is not False


def morphisms_of_fractions(source: Fraction, target: Fraction, limit: int = 2, max_arrows: int = DEFAULT_MAX_ARROWS) -> List[Functor]:
    """Functors k: source.apex -> target.apex with target.p ∘ k = source.p and target.q ∘ k = source.q."""
    if not (source.p.cod.same_as(target.p.cod) and source.q.cod.same_as(target.q.cod)):
        raise PreconditionError("fractions with different source or target")
    found = []
    constraints = [over(source.p, target.p), over(source.q, target.q)]
    for objects, arrows in search_functors(source.apex, target.apex, constraints=constraints, max_arrows=max_arrows):
        found.append(Functor.from_tables(source.apex, target.apex, objects, arrows))
        if limit is not None and len(found) >= limit:
            break
    return found


def is_irreducible(fr: Fraction, competitors: Sequence[Fraction] = (), max_arrows: int = DEFAULT_MAX_ARROWS) -> IrreducibilityReport:
    """
    The five direct irreducibility conditions, plus terminality against the
    given equivalent representatives when any are supplied.

    Raises:
        NotAMeromorphismError: fr is not a meromorphism.
    """
    report = _require_meromorphism(fr)
    diagram = report.butterfly
    terminal = None
    if competitors:
        terminal = all(len(morphisms_of_fractions(c, fr, max_arrows=max_arrows)) == 1 for c in competitors)
    return IrreducibilityReport(
        s_null=diagram.s.is_null,
        n_transverse_r=transversality_status(diagram.apex, diagram.n, diagram.r) is Transversality.TRANSVERSE,
        cotransverse=report.cotransversal is Cotransversality.COTRANSVERSE,
        u_actor=analyze_functor(diagram.u).actor,
        v_actor=analyze_functor(diagram.v).actor,
        terminal=terminal,
    )


@dataclass(frozen=True)
class Reduction:
    fraction: Fraction
    projection: Functor


def reduce_with_projection(fr: Fraction) -> Reduction:
    """K/S with S = N ∩ R, the induced p̄, q̄ and the projection K -> K/S."""
    report = _require_meromorphism(fr)
    quotient = quotient_by_principal(fr.apex, report.butterfly.s)
    pi = quotient.projection
    return Reduction(Fraction(descend(pi, fr.p), descend(pi, fr.q)), pi)


def reduce(fr: Fraction) -> Fraction:
    return reduce_with_projection(fr).fraction


@dataclass(frozen=True, eq=False)
class Meromorphism:
    representative: Fraction
    reduced: Fraction
    projection: Functor

    @property
    def source(self) -> FiniteGroupoid:
        return self.reduced.source

    @property
    def target(self) -> FiniteGroupoid:
        return self.reduced.target


def make_meromorphism(fr: Fraction) -> Meromorphism:
    """
    Raises:
        NotAMeromorphismError: listing the failed conditions.
    """
    reduction = reduce_with_projection(fr)
    return Meromorphism(fr, reduction.fraction, reduction.projection)


# Equivalence of fractions

def fraction_isomorphism(fr1: Fraction, fr2: Fraction, max_arrows: int = DEFAULT_MAX_ARROWS) -> Optional[Functor]:
    """An isomorphism k of apexes with p2 ∘ k = p1 and q2 ∘ k = q1, or None."""
    if not (fr1.p.cod.same_as(fr2.p.cod) and fr1.q.cod.same_as(fr2.q.cod)):
        raise PreconditionError("fractions with different source or target")
    constraints = [over(fr1.p, fr2.p), over(fr1.q, fr2.q)]
    found = next(search_functors(fr1.apex, fr2.apex, constraints=constraints, bijective=True, max_arrows=max_arrows), None)
    if found is None:
        return None
    return Functor.from_tables(fr1.apex, fr2.apex, *found)


@dataclass(frozen=True)
class EquivalenceWitness:
    """Apex W with s-equivalences k1: W -> K1 and k2: W -> K2 under which the fractions agree."""

    apex: FiniteGroupoid
    k1: Functor
    k2: Functor
    mode: str

    def verify(self, fr1: Fraction, fr2: Fraction) -> bool:
        return (
            self.k1.then(fr1.p).same_maps(self.k2.then(fr2.p))
            and self.k1.then(fr1.q).same_maps(self.k2.then(fr2.q))
            and analyze_functor(self.k1).s_equivalence
            and analyze_functor(self.k2).s_equivalence
        )

    def then(self, other: "EquivalenceWitness", max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> "EquivalenceWitness":
        """
        fr1 ~ fr3 from self: fr1 ~ fr2 and other: fr2 ~ fr3, over the fibred
        product of the two legs into the apex of fr2.
        """
        if not self.k2.cod.same_as(other.k1.cod):
            raise PreconditionError("witnesses do not meet at a common fraction")
        common = fibred_product(self.k2, other.k1, max_construction_arrows)
        return EquivalenceWitness(common.groupoid, common.left.then(self.k1), common.right.then(other.k2), f"{self.mode}+{other.mode}")


def fractions_equivalent(
        fr1: Fraction,
        fr2: Fraction,
        mode: str = "reduce",
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Optional[EquivalenceWitness]:
    """
    Decide equivalence of two meromorphism representatives.

    Args:
        mode: "reduce" compares the reductions up to isomorphism and builds the
            common apex as a fibred product over the reduced apex; "direct"
            looks for s-equivalence legs among the given apexes and the fibred
            product over G × H.

    Returns:
        EquivalenceWitness or None.
    """
    if mode == "reduce":
        r1, r2 = reduce_with_projection(fr1), reduce_with_projection(fr2)
        k = fraction_isomorphism(r1.fraction, r2.fraction, max_arrows=max_arrows)
        if k is None:
            return None
        common = fibred_product(r1.projection.then(k), r2.projection, max_construction_arrows)
        return EquivalenceWitness(common.groupoid, common.left, common.right, mode)

    if mode == "direct":
        _require_meromorphism(fr1)
        _require_meromorphism(fr2)
        for k2 in morphisms_of_fractions(fr1, fr2, limit=None, max_arrows=max_arrows):
            if analyze_functor(k2).s_equivalence:
                return EquivalenceWitness(fr1.apex, Functor.identity(fr1.apex), k2, mode)
        for k1 in morphisms_of_fractions(fr2, fr1, limit=None, max_arrows=max_arrows):
            if analyze_functor(k1).s_equivalence:
                return EquivalenceWitness(fr2.apex, k1, Functor.identity(fr2.apex), mode)
        both = product(fr1.target, fr1.source)
        common = fibred_product(
            pairing(fr1.p, fr1.q, both), pairing(fr2.p, fr2.q, both), max_construction_arrows,
        )
        if analyze_functor(common.left).s_equivalence and analyze_functor(common.right).s_equivalence:
            return EquivalenceWitness(common.groupoid, common.left, common.right, mode)
        return None

    raise PreconditionError(f"unknown equivalence mode '{mode}'")


def meromorphisms_equal(m1: Meromorphism, m2: Meromorphism, max_arrows: int = DEFAULT_MAX_ARROWS) -> bool:
    return fraction_isomorphism(m1.reduced, m2.reduced, max_arrows=max_arrows) is not None


# Composition, gamma and inverses

def compose_meromorphisms(
        m2: Meromorphism,
        m1: Meromorphism,
        use_representatives: bool = False,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Meromorphism:
    """
    m2 ∘ m1 for m1: H ⇢ G and m2: G ⇢ F, through the pullback of m1's
    numerator against m2's denominator.
    """
    f1 = m1.representative if use_representatives else m1.reduced
    f2 = m2.representative if use_representatives else m2.reduced
    if not f1.p.cod.same_as(f2.q.cod):
        raise PreconditionError("meromorphisms are not composable")
    middle = fibred_product(f1.p, f2.q, max_construction_arrows)
    return make_meromorphism(Fraction(middle.right.then(f2.p), middle.left.then(f1.q)))


def gamma(f: Functor, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Meromorphism:
    """The meromorphism of a functor, given by its holograph."""
    h = holograph(f, max_construction_arrows)
    return make_meromorphism(Fraction(h.p, h.q))


def identity_meromorphism(g: FiniteGroupoid, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Meromorphism:
    return gamma(Functor.identity(g), max_construction_arrows)


def is_meriedric_equivalence(m: Meromorphism) -> bool:
    return analyze_functor(m.reduced.p).s_equivalence


def invert_meromorphism(m: Meromorphism) -> Meromorphism:
    if not is_meriedric_equivalence(m):
        raise PreconditionError("only meriedric equivalences have inverses")
    return make_meromorphism(m.reduced.swapped())


def is_holomorphism(m: Meromorphism, max_arrows: int = DEFAULT_MAX_ARROWS) -> Optional[Functor]:
    """
    p̄ ∘ s for a section s of the reduced denominator, or None.

    Every s-equivalence of finite groupoids splits, so a representative is
    always found.
    """
    section = find_section(m.reduced.q, max_arrows=max_arrows)
    if section is None:
        return None
    return section.then(m.reduced.p)


# Morita equivalence

@dataclass(frozen=True)
class MoritaWitness:
    """
    Attributes:
        apex, left, right: s-equivalences left: apex -> g and right: apex -> h.
        chain: i-equivalences out of the skeleton of g, into g and into h.
    """

    apex: FiniteGroupoid
    left: Functor
    right: Functor
    chain: Tuple[Functor, Functor]


def is_i_equivalence(f: Functor) -> bool:
    """An equivalence injective on objects and arrows."""
    return f.f0.is_injective and f.f1.is_injective and analyze_functor(f).equivalence


def morita_invariants_agree(g: FiniteGroupoid, h: FiniteGroupoid, max_arrows: int = DEFAULT_MAX_ARROWS) -> bool:
    """Equal orbit counts and equal multisets of vertex groups up to isomorphism."""
    dg, dh = orbits_and_vertex_groups(g), orbits_and_vertex_groups(h)
    if dg.count != dh.count:
        return False
    remaining = list(dh.vertex_groups)
    for group in dg.vertex_groups:
        match = next((i for i, other in enumerate(remaining) if are_isomorphic(group, other, max_arrows)), None)
        if match is None:
            return False
        remaining.pop(match)
    return True


def morita_equivalent(
        g: FiniteGroupoid,
        h: FiniteGroupoid,
        max_arrows: int = DEFAULT_MAX_ARROWS,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Optional[MoritaWitness]:
    """
    A common apex with s-equivalences onto g and h, or None.

    The witness is the fibred product of the two skeleton retractions over an
    isomorphism of skeleta; the invariant fast path must agree with it, and
    the skeleton inclusions must form a span of i-equivalences.
    """
    fast = morita_invariants_agree(g, h, max_arrows)
    sg, sh = skeleton(g), skeleton(h)
    iso = find_isomorphism(sg.plurigroup, sh.plurigroup, max_arrows=max_arrows)
    witness = None
    if iso is not None:
        phi = Functor(sg.plurigroup, sh.plurigroup, *iso)
        common = fibred_product(sg.retraction.then(phi), sh.retraction, max_construction_arrows)
        chain = (sg.inclusion, phi.then(sh.inclusion))
        if not all(is_i_equivalence(leg) for leg in chain):
            raise RuntimeError("skeleton inclusions do not form an i-equivalence span")
        witness = MoritaWitness(common.groupoid, common.left, common.right, chain)
    if fast != (witness is not None):
        raise RuntimeError("Morita invariants and witness construction disagree")
    return witness
