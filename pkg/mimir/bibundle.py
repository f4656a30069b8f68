"""
Bibundles: a set E with a left H-action along ρ and a free right G-action
along σ, the two commuting, with E/G identified with the objects of H.

An irreducible meromorphism H ⇢ G is read off as a bibundle on the objects of
its apex; a bibundle gives back the fraction on the two-sided action groupoid.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import PreconditionError, guard
from .fraction import Fraction, Meromorphism
from .functor import Functor
from .groupoid import FiniteGroupoid, ValidationReport, Violation, assemble


@dataclass(frozen=True)
class Bibundle:
    """
    Attributes:
        left: H, acting on the left; h·e is defined when src h = rho[e].
        right: G, acting on the right; e·g is defined when sigma[e] = tgt g.
        n_points: size of the carrier E.
        rho, sigma: the moment maps E -> objects(H) and E -> objects(G).
        left_action: (h, e) -> h·e.
        right_action: (e, g) -> e·g.
    """

    left: FiniteGroupoid
    right: FiniteGroupoid
    n_points: int
    rho: Tuple[int, ...]
    sigma: Tuple[int, ...]
    left_action: Dict[Tuple[int, int], int]
    right_action: Dict[Tuple[int, int], int]

    def act_left(self, h: int, e: int) -> int:
        return self.left_action[(h, e)]

    def act_right(self, e: int, g: int) -> int:
        return self.right_action[(e, g)]


def validate_bibundle(b: Bibundle, max_violations: int = 32) -> ValidationReport:
    """Report-valued check of the action, moment, freeness and principality laws."""
    violations: List[Violation] = []

    def fail(law, detail):
        if len(violations) < max_violations:
            violations.append(Violation(law, detail))

    H, G = b.left, b.right
    for e in range(b.n_points):
        for h in H.outgoing(b.rho[e]):
            image = b.left_action.get((h, e))
            if image is None:
                fail("left action not total", f"({h}, {e})")
            elif b.rho[image] != H.tgt[h] or b.sigma[image] != b.sigma[e]:
                fail("left moment", f"{h}·{e} = {image}")
        for g in G.incoming(b.sigma[e]):
            image = b.right_action.get((e, g))
            if image is None:
                fail("right action not total", f"({e}, {g})")
            elif b.sigma[image] != G.src[g] or b.rho[image] != b.rho[e]:
                fail("right moment", f"{e}·{g} = {image}")
    if violations:
        return ValidationReport(tuple(violations))

    for e in range(b.n_points):
        if b.act_left(H.unit[b.rho[e]], e) != e:
            fail("left unit", f"point {e}")
        if b.act_right(e, G.unit[b.sigma[e]]) != e:
            fail("right unit", f"point {e}")
        for h in H.outgoing(b.rho[e]):
            for h2 in H.outgoing(H.tgt[h]):
                if b.act_left(H.compose(h2, h), e) != b.act_left(h2, b.act_left(h, e)):
                    fail("left associativity", f"({h2}, {h}, {e})")
        for g in G.incoming(b.sigma[e]):
            for g2 in G.incoming(G.src[g]):
                if b.act_right(e, G.compose(g, g2)) != b.act_right(b.act_right(e, g), g2):
                    fail("right associativity", f"({e}, {g}, {g2})")
            if b.act_right(e, g) == e and g not in G.unit_set:
                fail("right action not free", f"{e}·{g} = {e}")
            for h in H.outgoing(b.rho[e]):
                if b.act_right(b.act_left(h, e), g) != b.act_left(h, b.act_right(e, g)):
                    fail("actions do not commute", f"({h}, {e}, {g})")

    orbit_of = {}
    for e in range(b.n_points):
        orbit = frozenset(b.act_right(e, g) for g in G.incoming(b.sigma[e]))
        orbit_of[e] = orbit
    base_of_orbit = {}
    for e, orbit in orbit_of.items():
        if base_of_orbit.setdefault(orbit, b.rho[e]) != b.rho[e]:
            fail("rho not constant on orbits", f"point {e}")
    images = list(base_of_orbit.values())
    if sorted(images) != list(H.objects):
        fail("E/G is not the base of H", f"orbits over {sorted(images)}")
    return ValidationReport(tuple(violations))


def to_bibundle(m: Meromorphism) -> Bibundle:
    """
    The bibundle of the reduced representative (K, p, q): E = objects(K),
    σ = p0, ρ = q0; h·e is the target of the unique Ker p arrow over h leaving
    e, and e·g the target of the unique Ker q arrow over g⁻¹ leaving e.
    """
    fr = m.reduced
    k, p, q = fr.apex, fr.p, fr.q
    G, H = fr.target, fr.source
    left_action: Dict[Tuple[int, int], int] = {}
    right_action: Dict[Tuple[int, int], int] = {}
    for x in k.arrows:
        e = k.src[x]
        if p(x) in G.unit_set:
            if left_action.setdefault((q(x), e), k.tgt[x]) != k.tgt[x]:
                raise PreconditionError("left lifts are not unique; reduce the meromorphism first")
        if q(x) in H.unit_set:
            g = G.inv[p(x)]
            if right_action.setdefault((e, g), k.tgt[x]) != k.tgt[x]:
                raise PreconditionError("right lifts are not unique; reduce the meromorphism first")
    return Bibundle(H, G, k.n_objects, q.f0.image, p.f0.image, left_action, right_action)


def from_bibundle(b: Bibundle) -> Fraction:
    """
    The fraction on the two-sided action groupoid of b.

    Arrows are (h, e, g) with src h = ρ(e) and tgt g = σ(e), running from e to
    h·e·g; (h', e', g') ∘ (h, e, g) = (h'h, e, gg'). The denominator keeps h,
    the numerator sends the arrow to g⁻¹.
    """
    H, G = b.left, b.right
    arrows = [
        (h, e, g)
        for e in range(b.n_points)
        for h in H.outgoing(b.rho[e])
        for g in G.incoming(b.sigma[e])
    ]

    def target(a):
        h, e, g = a
        return b.act_right(b.act_left(h, e), g)

    apex = assemble(
        range(b.n_points), arrows,
        src_of=lambda a: a[1], tgt_of=target,
        mul=lambda a2, a1: (H.compose(a2[0], a1[0]), a1[1], G.compose(a1[2], a2[2])),
        inv_of=lambda a: (H.inv[a[0]], target(a), G.inv[a[2]]),
        unit_of=lambda e: (H.unit[b.rho[e]], e, G.unit[b.sigma[e]]),
    ).groupoid
    q = Functor.from_tables(apex, H, b.rho, [h for h, _, _ in arrows])
    p = Functor.from_tables(apex, G, b.sigma, [G.inv[g] for _, _, g in arrows])
    return Fraction(p, q)


def bibundles_equal(b1: Bibundle, b2: Bibundle) -> bool:
    """Identical carriers, moments and actions."""
    return (
        b1.n_points == b2.n_points
        and b1.rho == b2.rho
        and b1.sigma == b2.sigma
        and b1.left_action == b2.left_action
        and b1.right_action == b2.right_action
    )


def bibundle_isomorphism(b1: Bibundle, b2: Bibundle, max_points: int = 12) -> Optional[Tuple[int, ...]]:
    """
    A bijection of carriers commuting with both moments and both actions, or
    None. Points are matched in order, each against the unused points with
    the same (ρ, σ).
    """
    if b1.n_points != b2.n_points or not (b1.left.same_as(b2.left) and b1.right.same_as(b2.right)):
        return None
    guard("bibundle", b1.n_points, max_points)
    if sorted(zip(b1.rho, b1.sigma)) != sorted(zip(b2.rho, b2.sigma)):
        return None

    image: Dict[int, int] = {}

    def consistent() -> bool:
        for (h, e), target in b1.left_action.items():
            if e in image and target in image and b2.left_action[(h, image[e])] != image[target]:
                return False
        for (e, g), target in b1.right_action.items():
            if e in image and target in image and b2.right_action[(image[e], g)] != image[target]:
                return False
        return True

    def extend(e: int) -> bool:
        if e == b1.n_points:
            return True
        used = set(image.values())
        for candidate in range(b2.n_points):
            if candidate in used or (b2.rho[candidate], b2.sigma[candidate]) != (b1.rho[e], b1.sigma[e]):
                continue
            image[e] = candidate
            if consistent() and extend(e + 1):
                return True
            del image[e]
        return False

    return tuple(image[e] for e in range(b1.n_points)) if extend(0) else None
