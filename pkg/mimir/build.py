"""
Constructions on finite groupoids: induced groupoids, the square groupoid, fibred
products, the holograph, quotients by principal subgroupoids, the subactor
decomposition, actor transfer, the weak pullback and the skeleton plurigroup.

Every construction refuses outputs above max_construction_arrows.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, List, Tuple

from .errors import MalformedSpecError, PreconditionError, QuotientError, guard
from .functor import Functor, FunctorProfile, Subgroupoid, analyze_functor, kernel
from .groupoid import (
    DEFAULT_MAX_CONSTRUCTION_ARROWS,
    FiniteGroupoid,
    SetMap,
    assemble,
    connecting_arrow,
    null_groupoid,
    orbits_and_vertex_groups,
    product,
)


def _partition(n: int, pairs) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """Classes of the equivalence generated by pairs on 0..n-1, ordered by least member."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    roots: Dict[int, List[int]] = {}
    for x in range(n):
        roots.setdefault(find(x), []).append(x)
    classes = tuple(tuple(members) for _, members in sorted(roots.items(), key=lambda item: item[1][0]))
    class_of = [0] * n
    for index, members in enumerate(classes):
        for x in members:
            class_of[x] = index
    return tuple(class_of), classes


# Induced groupoid

@dataclass(frozen=True)
class Induced:
    groupoid: FiniteGroupoid
    projection: Functor


def induce(g: FiniteGroupoid, b: SetMap, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Induced:
    """
    Pullback of g along b: {0..k-1} -> objects(g).

    Arrows are triples (b', x, c') with x: b(c') -> b(b'), running c' -> b'.
    """
    if b.codomain_size != g.n_objects:
        raise PreconditionError("induce needs a map into the objects of g")
    k = b.domain_size
    arrows = [(bp, x, cp) for bp in range(k) for cp in range(k) for x in g.hom(b(bp), b(cp))]
    guard("induced groupoid", len(arrows), max_construction_arrows)
    built = assemble(
        range(k), arrows,
        src_of=lambda a: a[2], tgt_of=lambda a: a[0],
        mul=lambda a, c: (a[0], g.compose(a[1], c[1]), c[2]),
        inv_of=lambda a: (a[2], g.inv[a[1]], a[0]),
        unit_of=lambda x: (x, g.unit[b(x)], x),
    ).groupoid
    projection = Functor.from_tables(built, g, b.image, [a[1] for a in arrows])
    return Induced(built, projection)


# Square groupoid

@dataclass(frozen=True)
class SquareGroupoid:
    """
    □G: objects are the arrows of G; an arrow (a, k, l) runs from a to l a k⁻¹.

    varpi1 keeps the target-side arrow l, varpi2 the source-side arrow k, and
    iota sends an arrow a of G to the square (unit, a, a).
    """

    base: FiniteGroupoid
    groupoid: FiniteGroupoid
    varpi1: Functor
    varpi2: Functor
    iota: Functor
    arrow_index: Dict[Hashable, int]


def square_groupoid(g: FiniteGroupoid, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> SquareGroupoid:
    arrows = [(a, k, l) for a in g.arrows for k in g.outgoing(g.src[a]) for l in g.outgoing(g.tgt[a])]
    guard("square groupoid", len(arrows), max_construction_arrows)

    def target(s):
        a, k, l = s
        return g.compose_all(l, a, g.inv[k])

    built = assemble(
        g.arrows, arrows,
        src_of=lambda s: s[0], tgt_of=target,
        mul=lambda s2, s1: (s1[0], g.compose(s2[1], s1[1]), g.compose(s2[2], s1[2])),
        inv_of=lambda s: (target(s), g.inv[s[1]], g.inv[s[2]]),
        unit_of=lambda a: (a, g.unit[g.src[a]], g.unit[g.tgt[a]]),
    )
    square = built.groupoid
    varpi1 = Functor.from_tables(square, g, g.tgt, [s[2] for s in arrows])
    varpi2 = Functor.from_tables(square, g, g.src, [s[1] for s in arrows])
    iota = Functor.from_tables(
        g, square, g.unit,
        [built.arrow_index[(g.unit[g.src[a]], a, a)] for a in g.arrows],
    )
    return SquareGroupoid(g, square, varpi1, varpi2, iota, built.arrow_index)


# Fibred products

@dataclass(frozen=True)
class FibredProduct:
    """Pairs agreeing in the common codomain; left goes to dom(g), right to dom(u)."""

    groupoid: FiniteGroupoid
    left: Functor
    right: Functor
    object_index: Dict[Hashable, int]
    arrow_index: Dict[Hashable, int]


def fibred_product(g: Functor, u: Functor, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> FibredProduct:
    if not g.cod.same_as(u.cod):
        raise PreconditionError("fibred product needs functors with a common codomain")
    left_dom, right_dom = g.dom, u.dom
    by_image: Dict[int, List[int]] = {}
    for b in right_dom.arrows:
        by_image.setdefault(u(b), []).append(b)
    arrows = [(a, b) for a in left_dom.arrows for b in by_image.get(g(a), ())]
    guard("fibred product", len(arrows), max_construction_arrows)
    objects = [(x, y) for x in left_dom.objects for y in right_dom.objects if g.obj(x) == u.obj(y)]

    built = assemble(
        objects, arrows,
        src_of=lambda p: (left_dom.src[p[0]], right_dom.src[p[1]]),
        tgt_of=lambda p: (left_dom.tgt[p[0]], right_dom.tgt[p[1]]),
        mul=lambda p2, p1: (left_dom.compose(p2[0], p1[0]), right_dom.compose(p2[1], p1[1])),
        inv_of=lambda p: (left_dom.inv[p[0]], right_dom.inv[p[1]]),
        unit_of=lambda x: (left_dom.unit[x[0]], right_dom.unit[x[1]]),
    )
    apex = built.groupoid
    left = Functor.from_tables(apex, left_dom, [x for x, _ in objects], [a for a, _ in arrows])
    right = Functor.from_tables(apex, right_dom, [y for _, y in objects], [b for _, b in arrows])
    return FibredProduct(apex, left, right, built.object_index, built.arrow_index)


def pullback_comparison(
        left: Functor,
        right: Functor,
        g: Functor,
        u: Functor,
        max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Functor:
    """
    x -> (left x, right x) from the corner of a commuting square
    g ∘ left = u ∘ right into the fibred product of g and u. The square is a
    pullback exactly when this is an isomorphism.

    Raises:
        PreconditionError: the square does not commute.
    """
    if not left.dom.same_as(right.dom) or not left.then(g).same_maps(right.then(u)):
        raise PreconditionError("pullback comparison needs a commuting square")
    pulled = fibred_product(g, u, max_construction_arrows)
    corner = left.dom
    return Functor.from_tables(
        corner, pulled.groupoid,
        [pulled.object_index[(left.obj(x), right.obj(x))] for x in corner.objects],
        [pulled.arrow_index[(left(a), right(a))] for a in corner.arrows],
    )


def pairing(p: Functor, q: Functor, target: FiniteGroupoid = None) -> Functor:
    """⟨p, q⟩: K -> cod(p) × cod(q), with the product laid out as in groupoid.product."""
    if not p.dom.same_as(q.dom):
        raise PreconditionError("pairing needs functors with a common domain")
    target = target if target is not None else product(p.cod, q.cod)
    n2, m2 = q.cod.n_objects, q.cod.n_arrows
    return Functor.from_tables(
        p.dom, target,
        [p.obj(x) * n2 + q.obj(x) for x in p.dom.objects],
        [p(a) * m2 + q(a) for a in p.dom.arrows],
    )


# Holograph

@dataclass(frozen=True)
class Holograph:
    source: Functor
    square: SquareGroupoid
    apex: FiniteGroupoid
    p: Functor
    q: Functor
    section: Functor


def holograph(f: Functor, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Holograph:
    """
    The fraction (p, q) of f: H -> G, with apex K = H ×_G □G over varpi2.

    q projects to H, p is varpi1 of the square part, and the section of q is
    h -> (h, iota(f h)).
    """
    square = square_groupoid(f.cod, max_construction_arrows)
    pulled = fibred_product(f, square.varpi2, max_construction_arrows)
    h, g = f.dom, f.cod
    q = pulled.left
    p = pulled.right.then(square.varpi1)
    section = Functor.from_tables(
        h, pulled.groupoid,
        [pulled.object_index[(y, g.unit[f.obj(y)])] for y in h.objects],
        [pulled.arrow_index[(x, square.iota(f(x)))] for x in h.arrows],
    )
    return Holograph(f, square, pulled.groupoid, p, q, section)


def unit_embedding(g: FiniteGroupoid) -> Functor:
    """ω: null(B) -> G, each object to itself and each unit to its unit arrow."""
    base = null_groupoid(g.n_objects)
    return Functor.from_tables(base, g, range(g.n_objects), g.unit)


def divisor_fraction(g: FiniteGroupoid) -> Tuple[Functor, Functor]:
    """
    (δ, w) on the groupoid of same-source pairs of arrows: objects are the
    arrows of G and (x, y) runs from y to x. δ sends it to x y⁻¹, w to the
    unit at the common source in null(B).
    """
    keys = [(x, y) for x in g.arrows for y in g.arrows if g.src[x] == g.src[y]]
    apex = assemble(
        g.arrows, keys,
        src_of=lambda k: k[1], tgt_of=lambda k: k[0],
        mul=lambda k2, k1: (k2[0], k1[1]),
        inv_of=lambda k: (k[1], k[0]),
        unit_of=lambda x: (x, x),
    ).groupoid
    base = null_groupoid(g.n_objects)
    delta = Functor.from_tables(apex, g, g.tgt, [g.divisor(x, y) for x, y in keys])
    w = Functor.from_tables(apex, base, g.src, [base.unit[g.src[x]] for x, _ in keys])
    return delta, w


# Quotient by a principal subgroupoid

@dataclass(frozen=True)
class Quotient:
    groupoid: FiniteGroupoid
    projection: Functor
    object_classes: Tuple[Tuple[int, ...], ...]
    arrow_classes: Tuple[Tuple[int, ...], ...]


def quotient_by_principal(k: FiniteGroupoid, s: Subgroupoid) -> Quotient:
    """
    K/S: object classes of S, arrows the double cosets S x S.

    Raises:
        PreconditionError: s is not a uniferous, closed, principal subgroupoid of k.
        QuotientError: composition of double cosets depends on representatives.
    """
    if not s.parent.same_as(k):
        raise PreconditionError("subgroupoid does not live in this groupoid")
    if not (s.is_uniferous and s.is_closed and s.is_principal):
        raise PreconditionError("quotient needs a uniferous, closed, principal subgroupoid")

    object_of, object_classes = _partition(k.n_objects, ((k.src[n], k.tgt[n]) for n in s.arrow_ids))
    moves = []
    for x in k.arrows:
        for n in k.outgoing(k.tgt[x]):
            if n in s:
                moves.append((x, k.compose(n, x)))
        for n in k.incoming(k.src[x]):
            if n in s:
                moves.append((x, k.compose(x, n)))
    arrow_of, arrow_classes = _partition(k.n_arrows, moves)

    table: Dict[Tuple[int, int], int] = {}
    for y in k.arrows:
        for x in k.outgoing(k.tgt[y]):
            key = (arrow_of[x], arrow_of[y])
            value = arrow_of[k.compose(x, y)]
            if table.setdefault(key, value) != value:
                raise QuotientError()

    first = [members[0] for members in arrow_classes]
    quotient = assemble(
        range(len(object_classes)), range(len(arrow_classes)),
        src_of=lambda c: object_of[k.src[first[c]]],
        tgt_of=lambda c: object_of[k.tgt[first[c]]],
        mul=lambda c2, c1: table[(c2, c1)],
        inv_of=lambda c: arrow_of[k.inv[first[c]]],
        unit_of=lambda o: arrow_of[k.unit[object_classes[o][0]]],
    ).groupoid
    projection = Functor.from_tables(k, quotient, object_of, arrow_of)
    return Quotient(quotient, projection, object_classes, arrow_classes)


# Actions and actors

@dataclass(frozen=True)
class ActionLaw:
    """A left action of G on {0..n_points-1} along moment: point -> object of G."""

    groupoid: FiniteGroupoid
    n_points: int
    moment: Tuple[int, ...]
    act: Dict[Tuple[int, int], int]

    def validate(self):
        g = self.groupoid
        if len(self.moment) != self.n_points:
            raise MalformedSpecError("action law needs one moment per point")
        for e in range(self.n_points):
            if self.act.get((g.unit[self.moment[e]], e)) != e:
                raise MalformedSpecError(f"not an action: the unit moves point {e}")
            for a in g.outgoing(self.moment[e]):
                image = self.act.get((a, e))
                if image is None or self.moment[image] != g.tgt[a]:
                    raise MalformedSpecError(f"not an action: arrow {a} on point {e}")
                for b in g.outgoing(g.tgt[a]):
                    if self.act[(g.compose(b, a), e)] != self.act[(b, image)]:
                        raise MalformedSpecError(f"not an action: ({b}*{a})·{e}")
        return self


def action_groupoid_of(law: ActionLaw) -> Tuple[FiniteGroupoid, Functor]:
    """G ⋉ E with its projection actor; arrows (g, e) run e -> g·e."""
    g = law.groupoid
    arrows = [(a, e) for a in g.arrows for e in range(law.n_points) if law.moment[e] == g.src[a]]
    built = assemble(
        range(law.n_points), arrows,
        src_of=lambda p: p[1], tgt_of=lambda p: law.act[p],
        mul=lambda p2, p1: (g.compose(p2[0], p1[0]), p1[1]),
        inv_of=lambda p: (g.inv[p[0]], law.act[p]),
        unit_of=lambda e: (g.unit[law.moment[e]], e),
    ).groupoid
    return built, Functor.from_tables(built, g, law.moment, [a for a, _ in arrows])


def action_of_actor(a: Functor) -> ActionLaw:
    """The action of cod(a) on the objects of dom(a) carried by an actor."""
    if not analyze_functor(a).actor:
        raise PreconditionError("action law needs an actor")
    act = {(a(x), a.dom.src[x]): a.dom.tgt[x] for x in a.dom.arrows}
    return ActionLaw(a.cod, a.dom.n_objects, a.f0.image, act)


def actor_from_action(law: ActionLaw) -> Functor:
    return action_groupoid_of(law.validate())[1]


@dataclass(frozen=True)
class SubactorDecomposition:
    e: Functor
    a: Functor
    law: ActionLaw


def subactor_decompose(f: Functor, profile: FunctorProfile = None) -> SubactorDecomposition:
    """
    f = a ∘ e with e an s-equivalence and a the actor of cod(f) acting on
    objects(dom f)/Ker f.

    Raises:
        PreconditionError: f is not a subactor or its kernel is not principal.
    """
    profile = profile or analyze_functor(f)
    if not profile.subactor:
        raise PreconditionError("subactor decomposition needs an i-faithful exactor")
    n = kernel(f)
    if not n.is_principal:
        raise PreconditionError("subactor decomposition needs a principal kernel")

    dom, cod = f.dom, f.cod
    class_of, classes = _partition(dom.n_objects, ((dom.src[x], dom.tgt[x]) for x in n.arrow_ids))
    moment = tuple(f.obj(members[0]) for members in classes)
    act: Dict[Tuple[int, int], int] = {}
    for x in dom.arrows:
        key = (f(x), class_of[dom.src[x]])
        if act.setdefault(key, class_of[dom.tgt[x]]) != class_of[dom.tgt[x]]:
            raise PreconditionError("lifts disagree on the kernel quotient")
    law = ActionLaw(cod, len(classes), moment, act)
    middle, actor = action_groupoid_of(law)
    index = {key: i for i, key in enumerate(middle.labels)}
    e = Functor.from_tables(dom, middle, class_of, [index[(f(x), class_of[dom.src[x]])] for x in dom.arrows])
    return SubactorDecomposition(e, actor, law)


def transfer_actor(u: Functor, a: Functor, direction: str, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> Functor:
    """
    Move an actor across the s-equivalence u: G' -> G.

    Args:
        u: an s-equivalence.
        a: an actor over G ("pullback") or over G' ("pushforward").
        direction: "pullback" or "pushforward".

    Returns:
        Functor: the pulled-back actor over G', or the actor factor of u ∘ a over G.
    """
    if not analyze_functor(u).s_equivalence:
        raise PreconditionError("actor transfer needs an s-equivalence")
    if not analyze_functor(a).actor:
        raise PreconditionError("actor transfer needs an actor")
    if direction == "pullback":
        if not a.cod.same_as(u.cod):
            raise PreconditionError("pullback needs an actor over the codomain of u")
        return fibred_product(a, u, max_construction_arrows).right
    if direction == "pushforward":
        if not a.cod.same_as(u.dom):
            raise PreconditionError("pushforward needs an actor over the domain of u")
        return subactor_decompose(a.then(u)).a
    raise PreconditionError(f"unknown transfer direction '{direction}'")


# Weak pullback

@dataclass(frozen=True)
class WeakPullback:
    groupoid: FiniteGroupoid
    left: Functor
    right: Functor
    strict: FibredProduct
    comparison: Functor


def weak_pullback(g: Functor, u: Functor, max_construction_arrows: int = DEFAULT_MAX_CONSTRUCTION_ARROWS) -> WeakPullback:
    """
    Objects (x', c, y) with c: u0 y -> g0 x'; arrows (a', c, a) start at
    (src a', c, src a) and end at (tgt a', g(a') c u(a)⁻¹, tgt a).
    """
    if not g.cod.same_as(u.cod):
        raise PreconditionError("weak pullback needs functors with a common codomain")
    base, left_dom, right_dom = g.cod, g.dom, u.dom
    objects = [
        (x, c, y)
        for x in left_dom.objects for y in right_dom.objects
        for c in base.hom(g.obj(x), u.obj(y))
    ]
    arrows = [
        (a, c, b)
        for a in left_dom.arrows for b in right_dom.arrows
        for c in base.hom(g.obj(left_dom.src[a]), u.obj(right_dom.src[b]))
    ]
    guard("weak pullback", len(arrows), max_construction_arrows)

    def target(arrow):
        a, c, b = arrow
        return left_dom.tgt[a], base.compose_all(g(a), c, base.inv[u(b)]), right_dom.tgt[b]

    built = assemble(
        objects, arrows,
        src_of=lambda w: (left_dom.src[w[0]], w[1], right_dom.src[w[2]]),
        tgt_of=target,
        mul=lambda w2, w1: (left_dom.compose(w2[0], w1[0]), w1[1], right_dom.compose(w2[2], w1[2])),
        inv_of=lambda w: (left_dom.inv[w[0]], target(w)[1], right_dom.inv[w[2]]),
        unit_of=lambda o: (left_dom.unit[o[0]], o[1], right_dom.unit[o[2]]),
    )
    weak = built.groupoid
    left = Functor.from_tables(weak, left_dom, [o[0] for o in objects], [w[0] for w in arrows])
    right = Functor.from_tables(weak, right_dom, [o[2] for o in objects], [w[2] for w in arrows])

    strict = fibred_product(g, u, max_construction_arrows)
    pairs = strict.groupoid
    comparison = Functor.from_tables(
        pairs, weak,
        [built.object_index[(x, base.unit[g.obj(x)], y)] for x, y in pairs.object_labels],
        [built.arrow_index[(a, base.unit[g.obj(left_dom.src[a])], b)] for a, b in pairs.labels],
    )
    return WeakPullback(weak, left, right, strict, comparison)


# Skeleton

@dataclass(frozen=True)
class Skeleton:
    """
    One object per orbit carrying the vertex group at its lowest object.

    theta[b] is the lowest-id arrow b -> representative (the unit at the
    representative itself).
    """

    plurigroup: FiniteGroupoid
    retraction: Functor
    inclusion: Functor
    theta: Tuple[int, ...]
    representatives: Tuple[int, ...]


def skeleton(g: FiniteGroupoid) -> Skeleton:
    decomposition = orbits_and_vertex_groups(g)
    reps = decomposition.representatives
    theta = tuple(
        g.unit[x] if x == reps[decomposition.orbit_of[x]] else connecting_arrow(g, x, reps[decomposition.orbit_of[x]])
        for x in g.objects
    )
    keys = [(i, a) for i, loops in enumerate(decomposition.vertex_arrows) for a in loops]
    built = assemble(
        range(len(reps)), keys,
        src_of=lambda k: k[0], tgt_of=lambda k: k[0],
        mul=lambda k2, k1: (k1[0], g.compose(k2[1], k1[1])),
        inv_of=lambda k: (k[0], g.inv[k[1]]),
        unit_of=lambda i: (i, g.unit[reps[i]]),
    )
    plurigroup = built.groupoid
    orbit_of = decomposition.orbit_of
    retraction = Functor.from_tables(
        g, plurigroup, orbit_of,
        [
            built.arrow_index[(orbit_of[g.src[x]], g.compose_all(theta[g.tgt[x]], x, g.inv[theta[g.src[x]]]))]
            for x in g.arrows
        ],
    )
    inclusion = Functor.from_tables(plurigroup, g, reps, [a for _, a in keys])
    return Skeleton(plurigroup, retraction, inclusion, theta, reps)
