"""
Proposition suites run by selftest.

Each suite turns a family of statements into named cases over the catalog. A
case returns a one-line detail when it holds, raises AssertionError when it
does not, and lets SizeGuardError through when its inputs are past the caps.
"""

import threading
from dataclasses import dataclass, field
from functools import cached_property, partial
from itertools import product as cartesian
from typing import Callable, Dict, List, Optional, Tuple

import numpy

from .atlas import orbital_atlas, refine_atlas
from .bibundle import from_bibundle, to_bibundle, validate_bibundle
from .build import divisor_fraction, holograph, induce, square_groupoid, unit_embedding
from .catalog import (
    Entry,
    FunctorEntry,
    MeromorphismEntry,
    catalog_functors,
    catalog_groupoids,
    collapse,
    meromorphism_pair,
    s_equivalence_onto,
    small_groupoids,
)
from .fraction import (
    Fraction,
    compose_meromorphisms,
    fraction_isomorphism,
    fractions_equivalent,
    gamma,
    identity_meromorphism,
    invert_meromorphism,
    is_irreducible,
    is_meriedric_equivalence,
    meromorphisms_equal,
    morita_equivalent,
    reduce,
)
from .functor import Functor, analyze_functor, kernel, naturally_isomorphic, validate_functor
from .groupoid import (
    DEFAULT_MAX_ARROWS,
    DEFAULT_MAX_CONSTRUCTION_ARROWS,
    FiniteGroupoid,
    SetMap,
    build_standard,
    classify,
    cyclic_group,
    drop_comp_entry,
    has_thin_hom_sets,
    null_groupoid,
    orbits_and_vertex_groups,
    orbits_by_reachability,
    pair_groupoid,
    validate_groupoid,
    with_inverse,
)
from .gzprobe import FOUND, HOLDS, NOT_FOUND, cstar_probe, dstar_probe
from .reflect import check_reflection_universal, fundamental_plurigroup
from .search import find_isomorphism, search_functors
from .transversal import Cotransversality, cotransversality

BRUTE_FORCE_ARROWS = 8
CHAIN_ARROWS = 2
CHAIN_SAMPLE = 24


@dataclass(frozen=True)
class Case:
    name: str
    run: Callable[[], str]


def expect(condition: bool, message: str):
    if not condition:
        raise AssertionError(message)


@dataclass
class SuiteContext:
    """Catalog parameters shared by every suite, with the generated catalog cached."""

    max_objects: int = 3
    seed: int = 7
    max_arrows: int = DEFAULT_MAX_ARROWS
    max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS
    _pairs: Dict[int, Tuple[MeromorphismEntry, Optional[MeromorphismEntry]]] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @cached_property
    def groupoids(self) -> List[Entry]:
        return catalog_groupoids(self.max_objects)

    @cached_property
    def small(self) -> List[Entry]:
        return small_groupoids(self.max_objects)

    @cached_property
    def functors(self) -> List[FunctorEntry]:
        return catalog_functors(self.max_objects, self.seed, max_arrows=self.max_arrows)

    def meromorphisms(self, index: int) -> Tuple[MeromorphismEntry, Optional[MeromorphismEntry]]:
        """meromorphism_pair of functor number index, computed once per context."""
        with self._lock:
            cached = self._pairs.get(index)
        if cached is not None:
            return cached
        built = meromorphism_pair(self.functors[index], self.seed, self.max_construction_arrows)
        with self._lock:
            return self._pairs.setdefault(index, built)

    def warm(self):
        """Build the catalog before cases are spread over threads."""
        return len(self.groupoids), len(self.small), len(self.functors)


def _case(suite: str, label: str, fn: Callable, *args) -> Case:
    return Case(f"{suite}/{label}", partial(fn, *args))


# 01: groupoid axioms and validator mutations

def _axioms(g: FiniteGroupoid) -> str:
    report = validate_groupoid(g)
    expect(report.ok, f"catalog groupoid fails {report.axioms}")
    flags = classify(g)
    expect(not flags.banal or (flags.principal and flags.transitive), "banal without principal and transitive")
    expect(not flags.null or flags.principal, "null without principal")
    expect(not flags.group or (flags.plurigroup and g.n_objects == 1), "group without a single object")
    expect(flags.principal == has_thin_hom_sets(g), "principal flag disagrees with hom-set scan")
    expect(orbits_and_vertex_groups(g).orbits == orbits_by_reachability(g), "orbits disagree with reachability")

    mutations = 0
    for a in g.arrows:
        for b in g.incoming(g.src[a]):
            if g.unit[g.src[a]] != b:
                broken = validate_groupoid(drop_comp_entry(g, a, b))
                expect(not broken.ok, f"deleted comp({a}, {b}) went unnoticed")
                expect(broken.first.axiom == "comp undefined for composable pair", f"deleted comp({a}, {b}) reported as {broken.first.axiom}")
                mutations += 1
                break
        if mutations:
            break
    for a in g.arrows:
        if not g.is_unit(a):
            wrong = next(b for b in g.arrows if b != g.inv[a])
            expect(not validate_groupoid(with_inverse(g, a, wrong)).ok, f"inverse of {a} set to {wrong} went unnoticed")
            mutations += 1
            break
    return f"{flags} ; {mutations} mutations detected"


def axiom_cases(ctx: SuiteContext) -> List[Case]:
    return [_case("01-axioms", e.name, _axioms, e.groupoid) for e in ctx.groupoids]


# 02: square groupoid counts

def brute_force_squares(g: FiniteGroupoid) -> int:
    """Commuting quadruples (a, b, k, l) with b k = l a."""
    count = 0
    for a, b, k, l in cartesian(g.arrows, repeat=4):
        if g.src[k] != g.src[a] or g.tgt[k] != g.src[b]:
            continue
        if g.src[l] != g.tgt[a] or g.tgt[l] != g.tgt[b]:
            continue
        if g.compose(b, k) == g.compose(l, a):
            count += 1
    return count


def _squares(g: FiniteGroupoid, expected: Optional[int], max_construction_arrows: int) -> str:
    square = square_groupoid(g, max_construction_arrows)
    counted = brute_force_squares(g)
    expect(square.groupoid.n_arrows == counted, f"square groupoid has {square.groupoid.n_arrows} arrows, brute force {counted}")
    if expected is not None:
        expect(counted == expected, f"expected {expected} squares, found {counted}")
    expect(validate_groupoid(square.groupoid).ok, "square groupoid is not a groupoid")
    for leg in (square.varpi1, square.varpi2):
        expect(analyze_functor(leg).s_equivalence, "projection of the square groupoid is not an s-equivalence")
        expect(square.iota.then(leg).same_maps(Functor.identity(g)), "iota is not a common section")
    return f"{counted} squares"


def square_cases(ctx: SuiteContext) -> List[Case]:
    cap = ctx.max_construction_arrows
    cases = [
        _case("02-squares", "pair2", _squares, pair_groupoid(2), 16, cap),
        _case("02-squares", "Z2", _squares, cyclic_group(2), 8, cap),
    ]
    cases += [
        _case("02-squares", f"brute/{e.name}", _squares, e.groupoid, None, cap)
        for e in ctx.groupoids if e.groupoid.n_arrows <= BRUTE_FORCE_ARROWS
    ]
    return cases


# 03: holograph law

def _holograph_law(f: Functor, ctx: SuiteContext) -> str:
    h = holograph(f, ctx.max_construction_arrows)
    expect(analyze_functor(h.p).exactor, "p is not an exactor")
    expect(validate_functor(h.section).ok, "section is not a functor")
    expect(h.section.then(h.q).same_maps(Functor.identity(f.dom)), "section does not split q")
    expect(analyze_functor(h.q).s_equivalence, "q is not an s-equivalence")
    expect(naturally_isomorphic(h.p, h.q.then(f), ctx.max_arrows) is not None, "p is not naturally isomorphic to f q")
    return f"apex {h.apex.n_objects} objects, {h.apex.n_arrows} arrows"


def _holograph_identity(g: FiniteGroupoid, ctx: SuiteContext) -> str:
    h = holograph(Functor.identity(g), ctx.max_construction_arrows)
    square = h.square
    iso = fraction_isomorphism(Fraction(h.p, h.q), Fraction(square.varpi1, square.varpi2), ctx.max_arrows)
    expect(iso is not None, "holograph of the identity is not the square groupoid fraction")
    return "isomorphic to (varpi1, varpi2)"


def _holograph_unit(g: FiniteGroupoid, ctx: SuiteContext) -> str:
    h = holograph(unit_embedding(g), ctx.max_construction_arrows)
    delta, w = divisor_fraction(g)
    iso = fraction_isomorphism(Fraction(h.p, h.q), Fraction(delta, w), ctx.max_arrows)
    expect(iso is not None, "holograph of the unit map is not the divisor fraction")
    return "isomorphic to (divisor, source unit)"


def holograph_cases(ctx: SuiteContext) -> List[Case]:
    cases = [_case("03-holograph", e.name, _holograph_law, e.functor, ctx) for e in ctx.functors]
    cases += [_case("03-holograph", f"identity/{e.name}", _holograph_identity, e.groupoid, ctx) for e in ctx.small]
    cases += [_case("03-holograph", f"unit/{e.name}", _holograph_unit, e.groupoid, ctx) for e in ctx.small]
    return cases


# 04: properties of f read off the numerator of its holograph

def _numerator_profile(f: Functor, ctx: SuiteContext) -> str:
    mine = analyze_functor(f)
    numerator = analyze_functor(holograph(f, ctx.max_construction_arrows).p)
    expect(mine.essentially_surjective == numerator.s_exactor, "essential surjectivity disagrees with s-exactor numerator")
    expect(mine.i_faithful == numerator.subactor, "i-faithfulness disagrees with subactor numerator")
    expect(mine.equivalence == numerator.s_equivalence, "equivalence disagrees with s-equivalence numerator")
    return " ".join(mine.names()) or "-"


def numerator_cases(ctx: SuiteContext) -> List[Case]:
    return [_case("04-numerator", e.name, _numerator_profile, e.functor, ctx) for e in ctx.functors]


# 05: the irreducibility conditions agree

def _irreducibility(index: int, ctx: SuiteContext) -> str:
    base, twin = ctx.meromorphisms(index)
    fractions = [base.meromorphism.representative, base.meromorphism.reduced]
    if twin is not None:
        fractions += [twin.meromorphism.representative, twin.meromorphism.reduced]
    irreducible = 0
    for fr in fractions:
        report = is_irreducible(fr)
        expect(report.consistent, f"conditions disagree: {report.conditions}")
        irreducible += report.irreducible
    expect(is_irreducible(base.meromorphism.reduced).irreducible, "reduction is not irreducible")
    return f"{len(fractions)} fractions, {irreducible} irreducible"


def irreducibility_cases(ctx: SuiteContext) -> List[Case]:
    return [_case("05-irreducible", e.name, _irreducibility, i, ctx) for i, e in enumerate(ctx.functors)]


# 06: unique irreducible representative and bibundles

def _unique_representative(index: int, ctx: SuiteContext) -> str:
    base, twin = ctx.meromorphisms(index)
    m = base.meromorphism
    expect(fraction_isomorphism(reduce(m.reduced), m.reduced, ctx.max_arrows) is not None, "reduce is not idempotent")
    if twin is not None:
        expect(meromorphisms_equal(twin.meromorphism, m, ctx.max_arrows), "precomposed representative reduces differently")
    report = is_irreducible(m.reduced, competitors=[m.representative], max_arrows=ctx.max_arrows)
    expect(report.terminal, "reduction is not terminal")
    bundle = to_bibundle(m)
    checked = validate_bibundle(bundle)
    expect(checked.ok, f"bibundle fails {checked.axioms}")
    expect(fraction_isomorphism(from_bibundle(bundle), m.reduced, ctx.max_arrows) is not None, "bibundle does not give back the reduction")
    return f"bibundle on {bundle.n_points} points"


def representative_cases(ctx: SuiteContext) -> List[Case]:
    return [_case("06-representative", e.name, _unique_representative, i, ctx) for i, e in enumerate(ctx.functors)]


# 07: category laws for meromorphisms

def _tiny_functors(ctx: SuiteContext) -> List[FunctorEntry]:
    return [e for e in ctx.functors if max(e.functor.dom.n_arrows, e.functor.cod.n_arrows) <= CHAIN_ARROWS]


def _chains(entries: List[FunctorEntry], length: int) -> List[Tuple[FunctorEntry, ...]]:
    chains = [(e,) for e in entries]
    for _ in range(length - 1):
        chains = [c + (e,) for c in chains for e in entries if c[-1].functor.cod.same_as(e.functor.dom)]
    return chains


def _sample(items: list, seed: int) -> list:
    if len(items) <= CHAIN_SAMPLE:
        return items
    picked = numpy.random.default_rng(seed).choice(len(items), size=CHAIN_SAMPLE, replace=False)
    return [items[i] for i in sorted(picked.tolist())]


def _associativity(f: Functor, g: Functor, h: Functor, ctx: SuiteContext) -> str:
    cap = ctx.max_construction_arrows
    mf, mg, mh = gamma(f, cap), gamma(g, cap), gamma(h, cap)
    left = compose_meromorphisms(mh, compose_meromorphisms(mg, mf, max_construction_arrows=cap), max_construction_arrows=cap)
    right = compose_meromorphisms(compose_meromorphisms(mh, mg, max_construction_arrows=cap), mf, max_construction_arrows=cap)
    expect(meromorphisms_equal(left, right, ctx.max_arrows), "composition is not associative")
    return "associative"


def _functoriality(f: Functor, g: Functor, ctx: SuiteContext) -> str:
    cap = ctx.max_construction_arrows
    composite = compose_meromorphisms(gamma(g, cap), gamma(f, cap), max_construction_arrows=cap)
    expect(meromorphisms_equal(composite, gamma(f.then(g), cap), ctx.max_arrows), "gamma is not functorial")
    return "gamma(g) gamma(f) = gamma(g f)"


def _units(index: int, ctx: SuiteContext) -> str:
    cap = ctx.max_construction_arrows
    m = ctx.meromorphisms(index)[0].meromorphism
    after = compose_meromorphisms(identity_meromorphism(m.target, cap), m, max_construction_arrows=cap)
    before = compose_meromorphisms(m, identity_meromorphism(m.source, cap), max_construction_arrows=cap)
    expect(meromorphisms_equal(after, m, ctx.max_arrows), "identity on the target is not a unit")
    expect(meromorphisms_equal(before, m, ctx.max_arrows), "identity on the source is not a unit")
    return "both units"


def _parallel(f: Functor, g: Functor, ctx: SuiteContext) -> str:
    cap = ctx.max_construction_arrows
    iso = naturally_isomorphic(f, g, ctx.max_arrows) is not None
    same = meromorphisms_equal(gamma(f, cap), gamma(g, cap), ctx.max_arrows)
    expect(iso == same, f"naturally isomorphic {iso} but gamma equal {same}")
    return "equal" if same else "distinct"


def category_cases(ctx: SuiteContext) -> List[Case]:
    suite = "07-category"
    tiny = _tiny_functors(ctx)
    cases = [
        _case(suite, "assoc/" + "|".join(e.name for e in chain), _associativity, *(e.functor for e in chain), ctx)
        for chain in _sample(_chains(tiny, 3), ctx.seed)
    ]
    cases += [
        _case(suite, "gamma/" + "|".join(e.name for e in chain), _functoriality, *(e.functor for e in chain), ctx)
        for chain in _sample(_chains(small_functors(ctx), 2), ctx.seed + 1)
    ]
    cases += [_case(suite, f"unit/{e.name}", _units, i, ctx) for i, e in enumerate(ctx.functors) if e in tiny]
    by_ends: Dict[str, List[FunctorEntry]] = {}
    for e in ctx.functors:
        by_ends.setdefault(e.name.split("#")[0], []).append(e)
    for ends, group in by_ends.items():
        for i, first in enumerate(group):
            for second in group[i + 1:]:
                cases.append(_case(suite, f"parallel/{first.name}|{second.name}", _parallel, first.functor, second.functor, ctx))
    return cases


def small_functors(ctx: SuiteContext) -> List[FunctorEntry]:
    """Catalog functors whose domain and codomain are groupoids with at most three arrows."""
    return [e for e in ctx.functors if max(e.functor.dom.n_arrows, e.functor.cod.n_arrows) <= 3]


# 08: meriedric equivalences are the equivalences

def _localization(index: int, ctx: SuiteContext) -> str:
    cap = ctx.max_construction_arrows
    f = ctx.functors[index].functor
    m = ctx.meromorphisms(index)[0].meromorphism
    meriedric = is_meriedric_equivalence(m)
    expect(meriedric == analyze_functor(f).equivalence, f"meriedric {meriedric} for an equivalence flag {not meriedric}")
    if not meriedric:
        return "not invertible"
    inverse = invert_meromorphism(m)
    there = compose_meromorphisms(inverse, m, max_construction_arrows=cap)
    back = compose_meromorphisms(m, inverse, max_construction_arrows=cap)
    expect(meromorphisms_equal(there, identity_meromorphism(m.source, cap), ctx.max_arrows), "inverse after m is not the identity")
    expect(meromorphisms_equal(back, identity_meromorphism(m.target, cap), ctx.max_arrows), "m after inverse is not the identity")
    return "inverted both ways"


def localization_cases(ctx: SuiteContext) -> List[Case]:
    return [_case("08-localization", e.name, _localization, i, ctx) for i, e in enumerate(ctx.functors)]


# 09: Morita equivalence

def _morita(g: FiniteGroupoid, h: FiniteGroupoid, expected: bool, ctx: SuiteContext) -> str:
    witness = morita_equivalent(g, h, ctx.max_arrows, ctx.max_construction_arrows)
    expect((witness is not None) == expected, "expected equivalent" if expected else "expected not equivalent")
    if witness is None:
        return "not equivalent"
    expect(analyze_functor(witness.left).s_equivalence and analyze_functor(witness.right).s_equivalence, "witness legs are not s-equivalences")
    return f"witness apex with {witness.apex.n_arrows} arrows"


def _morita_sweep(entry: Entry, ctx: SuiteContext) -> str:
    # morita_equivalent raises when its two decisions disagree
    equivalent = [
        other.name for other in ctx.groupoids
        if morita_equivalent(entry.groupoid, other.groupoid, ctx.max_arrows, ctx.max_construction_arrows) is not None
    ]
    expect(entry.name in equivalent, "not equivalent to itself")
    return ",".join(equivalent)


def morita_cases(ctx: SuiteContext) -> List[Case]:
    suite = "09-morita"
    z2 = cyclic_group(2)
    cases = [_case(suite, f"pair{k}~null1", _morita, pair_groupoid(k), null_groupoid(1), True, ctx) for k in range(1, 5)]
    cases += [
        _case(suite, "Z2_induced2~Z2", _morita, induce(z2, SetMap(2, 1, (0, 0))).groupoid, z2, True, ctx),
        _case(suite, "Z2!~null1", _morita, z2, null_groupoid(1), False, ctx),
        _case(suite, "Z4!~Z2xZ2", _morita, cyclic_group(4), build_standard("product", z2, z2), False, ctx),
    ]
    cases += [_case(suite, f"sweep/{e.name}", _morita_sweep, e, ctx) for e in ctx.groupoids]
    return cases


# 10: the two fraction-calculus conditions for s-equivalences

def s_equivalences(ctx: SuiteContext) -> List[Tuple[str, Functor]]:
    found = [(f"collapse/pair{k}", collapse(pair_groupoid(k))) for k in range(2, 5)]
    for e in ctx.small:
        found.append((f"identity/{e.name}", Functor.identity(e.groupoid)))
        found.append((f"doubling/{e.name}", s_equivalence_onto(e.groupoid, 0, ctx.max_construction_arrows)))
    return found


def _cstar(s: Functor, ctx: SuiteContext) -> str:
    probed = 0
    for e in ctx.functors:
        if not e.functor.cod.same_as(s.cod):
            continue
        report = cstar_probe(e.functor, s, ctx.max_construction_arrows)
        expect(report.outcome == HOLDS, f"{e.name}: pullback side {report.outcome}")
        probed += 1
    return f"{probed} functors"


def _dstar_counterexample(ctx: SuiteContext) -> str:
    pair2 = pair_groupoid(2)
    swap = next(
        Functor.from_tables(pair2, pair2, *found)
        for found in search_functors(pair2, pair2, max_arrows=ctx.max_arrows)
        if found[0] == (1, 0)
    )
    report = dstar_probe(Functor.identity(pair2), swap, collapse(pair2), ctx.max_arrows)
    expect(report.outcome == NOT_FOUND, f"outcome {report.outcome}")
    return f"{report.outcome} within cap {report.cap}: {report.detail}"


def _dstar_trivial(g: FiniteGroupoid, ctx: SuiteContext) -> str:
    identity = Functor.identity(g)
    report = dstar_probe(identity, identity, identity, ctx.max_arrows)
    expect(report.outcome == FOUND, f"outcome {report.outcome}")
    return report.detail


def gz_cases(ctx: SuiteContext) -> List[Case]:
    suite = "10-gz"
    cases = [_case(suite, f"cstar/{name}", _cstar, s, ctx) for name, s in s_equivalences(ctx)]
    cases.append(_case(suite, "dstar/swap-on-pair2", _dstar_counterexample, ctx))
    cases += [_case(suite, f"dstar/identity/{e.name}", _dstar_trivial, e.groupoid, ctx) for e in ctx.small]
    return cases


# 11: reflection onto plurigroups

def _reflector_invariance(entry: Entry, ctx: SuiteContext) -> str:
    mine = fundamental_plurigroup(entry.groupoid, ctx.max_construction_arrows).plurigroup
    again = fundamental_plurigroup(mine, ctx.max_construction_arrows).plurigroup
    expect(find_isomorphism(mine, again, ctx.max_arrows) is not None, "reflection is not idempotent")
    partners = 0
    for other in ctx.groupoids:
        if morita_equivalent(entry.groupoid, other.groupoid, ctx.max_arrows, ctx.max_construction_arrows) is None:
            continue
        theirs = fundamental_plurigroup(other.groupoid, ctx.max_construction_arrows).plurigroup
        expect(find_isomorphism(mine, theirs, ctx.max_arrows) is not None, f"reflection differs from {other.name}")
        partners += 1
    return f"{partners} equivalent catalog groupoids"


def _reflector_universal(index: int, ctx: SuiteContext) -> str:
    f = ctx.functors[index].functor
    m = ctx.meromorphisms(index)[0].meromorphism
    report = check_reflection_universal(f.dom, f.cod, m, ctx.max_arrows, ctx.max_construction_arrows)
    expect(report.exists, "no factorization")
    expect(report.unique, f"{report.classes} factorizations up to natural isomorphism")
    return f"{report.candidates} matching functors"


def reflector_cases(ctx: SuiteContext) -> List[Case]:
    suite = "11-reflector"
    cases = [_case(suite, f"invariance/{e.name}", _reflector_invariance, e, ctx) for e in ctx.groupoids]
    cases += [
        _case(suite, f"universal/{e.name}", _reflector_universal, i, ctx)
        for i, e in enumerate(ctx.functors) if classify(e.functor.cod).plurigroup
    ]
    return cases


# 12: determinism

def fingerprint(functors: List[FunctorEntry]) -> List[Tuple[str, Tuple[int, ...], Tuple[int, ...]]]:
    return [(e.name, e.functor.f0.image, e.functor.f1.image) for e in functors]


def _catalog_reproducible(ctx: SuiteContext) -> str:
    first = fingerprint(catalog_functors(ctx.max_objects, ctx.seed, max_arrows=ctx.max_arrows))
    second = fingerprint(catalog_functors(ctx.max_objects, ctx.seed, max_arrows=ctx.max_arrows))
    expect(first == second, "catalog differs between two builds")
    expect(first == fingerprint(ctx.functors), "catalog differs from the shared one")
    return f"{len(first)} functors"


def _search_reproducible(g: FiniteGroupoid, ctx: SuiteContext) -> str:
    first = list(search_functors(g, g, max_arrows=ctx.max_arrows))
    expect(first == list(search_functors(g, g, max_arrows=ctx.max_arrows)), "search order changed")
    atlas = orbital_atlas(g)
    doubled = SetMap(g.n_objects + 1, g.n_objects, tuple(range(g.n_objects)) + (0,))
    refined = refine_atlas(atlas, doubled, ctx.max_construction_arrows)
    expect(refined.is_valid(), "refined atlas is not an orbital atlas")
    return f"{len(first)} endofunctors"


def determinism_cases(ctx: SuiteContext) -> List[Case]:
    suite = "12-determinism"
    cases = [_case(suite, "catalog", _catalog_reproducible, ctx)]
    cases += [_case(suite, f"search/{e.name}", _search_reproducible, e.groupoid, ctx) for e in ctx.small]
    return cases


# 13: composition laws, double cosets, cotransversality and equivalence modes

def _composition_laws(f: Functor, g: Functor) -> str:
    first, second, both = analyze_functor(f), analyze_functor(g), analyze_functor(f.then(g))
    implications = [
        ("faithful functors compose", first.i_faithful and second.i_faithful, both.i_faithful),
        ("s-extensors compose", first.s_extensor and second.s_extensor, both.s_extensor),
        ("equivalences compose", first.equivalence and second.equivalence, both.equivalence),
        ("actors compose", first.actor and second.actor, both.actor),
        ("faithful composite, faithful first", both.i_faithful, first.i_faithful),
        ("inactor composite, inactor first", both.inactor, first.inactor),
        ("surjective composite, surjective second", both.essentially_surjective, second.essentially_surjective),
        ("full over an inductor", second.inductor and both.s_full, first.s_full),
        ("exactor over an actor", second.actor and both.exactor, first.exactor),
        ("exactor under an s-exactor", first.s_exactor and both.exactor, second.exactor),
        ("equivalence under an s-extensor", first.s_extensor and both.equivalence, second.equivalence and first.s_equivalence),
    ]
    applied = 0
    for law, premise, conclusion in implications:
        if premise:
            expect(conclusion, law)
            applied += 1
    return f"{applied} laws applied"


def _double_cosets(f: Functor) -> str:
    n = kernel(f)
    for y in f.dom.arrows:
        fibre = frozenset(x for x in f.dom.arrows if f(x) == f(y))
        expect(n.double_coset(y) == fibre, f"fibre over {f(y)} is not the double coset of {y}")
    return f"{f.dom.n_arrows} arrows over kernel of {len(n)}"


def _cotransversal(index: int, ctx: SuiteContext) -> str:
    # cotransversality raises when kernels and legs disagree
    base, twin = ctx.meromorphisms(index)
    entries = [base] if twin is None else [base, twin]
    statuses = []
    for entry in entries:
        for fr in (entry.meromorphism.representative, entry.meromorphism.reduced):
            report = cotransversality(fr.p, fr.q)
            expect(report.status is not Cotransversality.NONE, f"{entry.name} is not cotransversal")
            statuses.append(report.status.value)
    return ",".join(statuses)


def _equivalence_modes(index: int, other: Optional[int], ctx: SuiteContext) -> str:
    # a direct witness always verifies; only the reduce mode is complete
    first = ctx.meromorphisms(index)[0]
    second = ctx.meromorphisms(index)[1] if other is None else ctx.meromorphisms(other)[0]
    if second is None:
        return "no second representative"
    fr1, fr2 = first.meromorphism.representative, second.meromorphism.representative
    decided = {}
    for mode in ("reduce", "direct"):
        witness = fractions_equivalent(fr1, fr2, mode, ctx.max_arrows, ctx.max_construction_arrows)
        expect(witness is None or witness.verify(fr1, fr2), f"{mode} witness does not verify")
        decided[mode] = witness is not None
    if other is None:
        expect(decided["reduce"] and decided["direct"], f"{second.name} is not equivalent to {first.name}")
    expect(decided["reduce"] or not decided["direct"], "direct finds a witness that reduce misses")
    return "equivalent" if decided["reduce"] else "distinct"


def _morita_classes(entry: Entry, ctx: SuiteContext) -> str:
    g = entry.groupoid
    decomposition = orbits_and_vertex_groups(g)
    if not decomposition.count:
        return "empty"
    flags = classify(g)
    to_null = morita_equivalent(g, null_groupoid(decomposition.count), ctx.max_arrows, ctx.max_construction_arrows)
    to_group = morita_equivalent(g, decomposition.vertex_groups[0], ctx.max_arrows, ctx.max_construction_arrows)
    expect(flags.principal == (to_null is not None), "principal flag disagrees with the null Morita class")
    expect(flags.transitive == (to_group is not None), "transitive flag disagrees with the group Morita class")
    return f"principal={flags.principal} transitive={flags.transitive}"


def law_cases(ctx: SuiteContext) -> List[Case]:
    suite = "13-laws"
    tiny = _tiny_functors(ctx)
    cases = [
        _case(suite, "compose/" + "|".join(e.name for e in chain), _composition_laws, *(e.functor for e in chain))
        for chain in _sample(_chains(ctx.functors, 2), ctx.seed + 2)
    ]
    cases += [
        _case(suite, f"coset/{e.name}", _double_cosets, e.functor)
        for e in ctx.functors if analyze_functor(e.functor).s_extensor
    ]
    cases += [_case(suite, f"cotransversal/{e.name}", _cotransversal, i, ctx) for i, e in enumerate(ctx.functors) if e in tiny]
    cases += [_case(suite, f"modes/{e.name}", _equivalence_modes, i, None, ctx) for i, e in enumerate(ctx.functors) if e in tiny]
    by_ends: Dict[str, List[int]] = {}
    for i, e in enumerate(ctx.functors):
        if e in tiny:
            by_ends.setdefault(e.name.split("#")[0], []).append(i)
    for group in by_ends.values():
        for k, i in enumerate(group):
            for j in group[k + 1:]:
                label = f"modes/{ctx.functors[i].name}|{ctx.functors[j].name}"
                cases.append(_case(suite, label, _equivalence_modes, i, j, ctx))
    cases += [_case(suite, f"morita-class/{e.name}", _morita_classes, e, ctx) for e in ctx.groupoids]
    return cases


SUITES = (
    axiom_cases,
    square_cases,
    holograph_cases,
    numerator_cases,
    irreducibility_cases,
    representative_cases,
    category_cases,
    localization_cases,
    morita_cases,
    gz_cases,
    reflector_cases,
    determinism_cases,
    law_cases,
)


def all_cases(ctx: SuiteContext) -> List[Case]:
    ctx.warm()
    cases = [case for suite in SUITES for case in suite(ctx)]
    return sorted(cases, key=lambda c: c.name)
