"""
Finite groupoids: tables, validation, standard constructors, orbits and classification.

Convention used everywhere: comp(a, b) is "b then a" and is defined exactly when
src(a) == tgt(b). Objects and arrows are dense integers; every enumeration runs in
increasing identifier order.
"""

from collections import defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import permutations
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy

from .errors import GroupoidError, MalformedSpecError

DEFAULT_MAX_ARROWS = 64
DEFAULT_MAX_CONSTRUCTION_ARROWS = 1024


@dataclass(frozen=True)
class SetMap:
    """A total map {0..domain_size-1} -> {0..codomain_size-1}."""

    domain_size: int
    codomain_size: int
    image: Tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.domain_size:
            raise MalformedSpecError(
                f"set map has {len(self.image)} images for a domain of size {self.domain_size}"
            )
        for x, y in enumerate(self.image):
            if not 0 <= y < self.codomain_size:
                raise MalformedSpecError(f"set map sends {x} to {y}, outside 0..{self.codomain_size - 1}")

    @classmethod
    def identity(cls, n: int) -> "SetMap":
        return cls(n, n, tuple(range(n)))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def then(self, other: "SetMap") -> "SetMap":
        """Return other ∘ self."""
        if other.domain_size != self.codomain_size:
            raise MalformedSpecError("set maps are not composable")
        return SetMap(self.domain_size, other.codomain_size, tuple(other.image[y] for y in self.image))

    def preimage(self, y: int) -> Tuple[int, ...]:
        return tuple(x for x, z in enumerate(self.image) if z == y)

    @property
    def is_injective(self) -> bool:
        return len(set(self.image)) == self.domain_size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.codomain_size

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    @property
    def kind(self) -> str:
        """Finite diptych class: bijective, injective, surjective or plain."""
        if self.is_bijective:
            return "bijective"
        if self.is_injective:
            return "injective"
        if self.is_surjective:
            return "surjective"
        return "plain"


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """
    A finite groupoid stored as tables.

    Attributes:
        n_objects: number of objects (the base B is 0..n_objects-1).
        src, tgt: source and target of every arrow.
        unit: unit arrow of every object.
        inv: inverse of every arrow.
        comp: (m x m) table, comp[a, b] = "b then a", -1 where undefined.
        labels: optional hashable key per arrow, kept by the constructors.
        object_labels: optional hashable key per object.
    """

    n_objects: int
    src: Tuple[int, ...]
    tgt: Tuple[int, ...]
    unit: Tuple[int, ...]
    inv: Tuple[int, ...]
    comp: numpy.ndarray = field(repr=False)
    labels: Optional[Tuple[Hashable, ...]] = field(default=None, repr=False)
    object_labels: Optional[Tuple[Hashable, ...]] = field(default=None, repr=False)

    @property
    def n_arrows(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def arrows(self) -> range:
        return range(len(self.src))

    @cached_property
    def table(self) -> List[List[int]]:
        return self.comp.tolist()

    @cached_property
    def unit_set(self) -> frozenset:
        return frozenset(self.unit)

    @cached_property
    def _homs(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        homs = defaultdict(list)
        for a in self.arrows:
            homs[(self.tgt[a], self.src[a])].append(a)
        return {key: tuple(value) for key, value in homs.items()}

    @cached_property
    def _outgoing(self) -> Tuple[Tuple[int, ...], ...]:
        out = [[] for _ in self.objects]
        for a in self.arrows:
            out[self.src[a]].append(a)
        return tuple(tuple(arrows) for arrows in out)

    @cached_property
    def _incoming(self) -> Tuple[Tuple[int, ...], ...]:
        into = [[] for _ in self.objects]
        for a in self.arrows:
            into[self.tgt[a]].append(a)
        return tuple(tuple(arrows) for arrows in into)

    def hom(self, target: int, source: int) -> Tuple[int, ...]:
        """Arrows source -> target, in increasing id order."""
        return self._homs.get((target, source), ())

    def loops(self, x: int) -> Tuple[int, ...]:
        return self.hom(x, x)

    def outgoing(self, x: int) -> Tuple[int, ...]:
        return self._outgoing[x]

    def incoming(self, x: int) -> Tuple[int, ...]:
        return self._incoming[x]

    def is_unit(self, a: int) -> bool:
        return a in self.unit_set

    def compose(self, a: int, b: int) -> int:
        """b then a."""
        c = self.table[a][b]
        if c < 0:
            raise GroupoidError(f"arrows {a} and {b} are not composable")
        return c

    def compose_all(self, *arrows: int) -> int:
        """compose_all(a, b, c) = a ∘ b ∘ c."""
        result = arrows[-1]
        for a in reversed(arrows[:-1]):
            result = self.compose(a, result)
        return result

    def transitor(self, a: int) -> Tuple[int, int]:
        """τ(a) = (tgt a, src a)."""
        return self.tgt[a], self.src[a]

    def divisor(self, x: int, y: int) -> int:
        """δ(x, y) = x ∘ y⁻¹ for arrows with a common source."""
        if self.src[x] != self.src[y]:
            raise GroupoidError(f"divisor needs a common source, got arrows {x} and {y}")
        return self.compose(x, self.inv[y])

    def label(self, a: int) -> Hashable:
        return self.labels[a] if self.labels is not None else a

    def same_as(self, other: "FiniteGroupoid") -> bool:
        """Identical tables (not merely isomorphic)."""
        if self is other:
            return True
        return (
            self.n_objects == other.n_objects
            and self.src == other.src
            and self.tgt == other.tgt
            and self.unit == other.unit
            and self.inv == other.inv
            and numpy.array_equal(self.comp, other.comp)
        )

    def __repr__(self):
        return f"FiniteGroupoid(objects={self.n_objects}, arrows={self.n_arrows})"


@dataclass(frozen=True)
class Assembled:
    """A groupoid built from keys, with the key -> id lookups."""

    groupoid: FiniteGroupoid
    object_index: Dict[Hashable, int]
    arrow_index: Dict[Hashable, int]


def assemble(
        object_keys: Sequence[Hashable],
        arrow_keys: Sequence[Hashable],
        src_of: Callable[[Hashable], Hashable],
        tgt_of: Callable[[Hashable], Hashable],
        mul: Callable[[Hashable, Hashable], Hashable],
        inv_of: Callable[[Hashable], Hashable],
        unit_of: Callable[[Hashable], Hashable]) -> Assembled:
    """
    Build a FiniteGroupoid from keyed objects and arrows.

    Args:
        object_keys: object keys in id order.
        arrow_keys: arrow keys in id order.
        src_of, tgt_of: key-level source and target.
        mul: mul(a, b) is "b then a" on keys, called only on composable pairs.
        inv_of, unit_of: key-level inverse and unit.

    Returns:
        Assembled: the groupoid with the key lookups.
    """
    object_keys = list(object_keys)
    arrow_keys = list(arrow_keys)
    object_index = {key: i for i, key in enumerate(object_keys)}
    arrow_index = {key: i for i, key in enumerate(arrow_keys)}
    if len(object_index) != len(object_keys) or len(arrow_index) != len(arrow_keys):
        raise MalformedSpecError("duplicate object or arrow keys")

    try:
        src = tuple(object_index[src_of(a)] for a in arrow_keys)
        tgt = tuple(object_index[tgt_of(a)] for a in arrow_keys)
        unit = tuple(arrow_index[unit_of(x)] for x in object_keys)
        inv = tuple(arrow_index[inv_of(a)] for a in arrow_keys)
        comp = numpy.full((len(arrow_keys), len(arrow_keys)), -1, dtype=numpy.int32)
        by_source = defaultdict(list)
        for i, s in enumerate(src):
            by_source[s].append(i)
        for j, b in enumerate(arrow_keys):
            for i in by_source[tgt[j]]:
                comp[i, j] = arrow_index[mul(arrow_keys[i], b)]
    except KeyError as e:
        raise MalformedSpecError(f"construction produced an unknown key {e}")

    comp.flags.writeable = False
    groupoid = FiniteGroupoid(
        n_objects=len(object_keys),
        src=src,
        tgt=tgt,
        unit=unit,
        inv=inv,
        comp=comp,
        labels=tuple(arrow_keys),
        object_labels=tuple(object_keys),
    )
    return Assembled(groupoid, object_index, arrow_index)


def from_tables(
        n_objects: int,
        arrows: Sequence[Tuple[int, int]],
        unit: Sequence[int],
        inv: Sequence[int],
        comp_entries: Sequence[Tuple[int, int, int]]) -> FiniteGroupoid:
    """
    Build a groupoid from raw tables without checking the axioms.

    Only structural well-formedness is enforced (sizes and id ranges); use
    validate_groupoid for the axioms.

    Args:
        n_objects: number of objects.
        arrows: (src, tgt) per arrow id.
        unit: unit arrow per object.
        inv: inverse per arrow.
        comp_entries: triples (a, b, c) meaning c = a after b.
    """
    m = len(arrows)
    if len(unit) != n_objects:
        raise MalformedSpecError(f"expected {n_objects} units, got {len(unit)}")
    if len(inv) != m:
        raise MalformedSpecError(f"expected {m} inverses, got {len(inv)}")
    for a, (s, t) in enumerate(arrows):
        if not (0 <= s < n_objects and 0 <= t < n_objects):
            raise MalformedSpecError(f"arrow {a} has endpoints outside the base")
    for value in list(unit) + list(inv):
        if not 0 <= value < m:
            raise MalformedSpecError(f"arrow id {value} out of range")

    comp = numpy.full((m, m), -1, dtype=numpy.int32)
    for a, b, c in comp_entries:
        if not (0 <= a < m and 0 <= b < m and 0 <= c < m):
            raise MalformedSpecError(f"comp entry ({a}, {b}, {c}) out of range")
        comp[a, b] = c
    comp.flags.writeable = False
    return FiniteGroupoid(
        n_objects=n_objects,
        src=tuple(s for s, _ in arrows),
        tgt=tuple(t for _, t in arrows),
        unit=tuple(unit),
        inv=tuple(inv),
        comp=comp,
    )


# Validation

@dataclass(frozen=True)
class Violation:
    axiom: str
    detail: str

    def __str__(self):
        return f"{self.axiom}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    @property
    def axioms(self) -> Tuple[str, ...]:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return tuple(seen)


def validate_groupoid(g: FiniteGroupoid, max_violations: int = 32) -> ValidationReport:
    """
    Check every groupoid axiom by table lookup.

    Returns:
        ValidationReport: empty when g is a groupoid, otherwise the failing
        instances in axiom order (units, inverses' endpoints, composability,
        unit laws, inverse laws, associativity).
    """
    violations: List[Violation] = []

    def fail(axiom, detail):
        if len(violations) < max_violations:
            violations.append(Violation(axiom, detail))

    table = g.table
    for x in g.objects:
        e = g.unit[x]
        if g.src[e] != x or g.tgt[e] != x:
            fail("unit endpoints", f"unit({x}) = {e} runs {g.src[e]} -> {g.tgt[e]}")

    for a in g.arrows:
        b = g.inv[a]
        if g.src[b] != g.tgt[a] or g.tgt[b] != g.src[a]:
            fail("inverse endpoints", f"inv({a}) = {b} does not reverse {a}")

    for a in g.arrows:
        for b in g.arrows:
            c = table[a][b]
            composable = g.src[a] == g.tgt[b]
            if composable and c < 0:
                fail("comp undefined for composable pair", f"({a}, {b})")
            elif not composable and c >= 0:
                fail("comp defined for non-composable pair", f"({a}, {b})")
            elif composable and (g.src[c] != g.src[b] or g.tgt[c] != g.tgt[a]):
                fail("comp endpoints", f"comp({a}, {b}) = {c}")

    for a in g.arrows:
        right = table[a][g.unit[g.src[a]]]
        left = table[g.unit[g.tgt[a]]][a]
        if right != a or left != a:
            fail("unit law", f"arrow {a}")

    for a in g.arrows:
        b = g.inv[a]
        if table[b][a] != g.unit[g.src[a]] or table[a][b] != g.unit[g.tgt[a]]:
            fail("inverse law", f"comp(inv({a}), {a}) = {table[b][a]}, inv({a}) = {b}")

    for b in g.arrows:
        for a in g.outgoing(g.tgt[b]):
            ab = table[a][b]
            if ab < 0:
                continue
            for c in g.incoming(g.src[b]):
                bc = table[b][c]
                left = table[ab][c]
                right = table[a][bc] if bc >= 0 else -1
                if left != right:
                    fail("associativity", f"({a}, {b}, {c})")

    return ValidationReport(tuple(violations))


# Standard constructors

def null_groupoid(k: int) -> FiniteGroupoid:
    """k objects, units only."""
    if k < 0:
        raise MalformedSpecError("null groupoid needs k >= 0")
    return assemble(
        range(k), range(k),
        src_of=lambda a: a, tgt_of=lambda a: a,
        mul=lambda a, b: a, inv_of=lambda a: a, unit_of=lambda x: x,
    ).groupoid


def pair_groupoid(k: int) -> FiniteGroupoid:
    """The banal groupoid on k objects: one arrow (t, s) for every pair."""
    if k < 0:
        raise MalformedSpecError("pair groupoid needs k >= 0")
    arrows = [(t, s) for t in range(k) for s in range(k)]
    return assemble(
        range(k), arrows,
        src_of=lambda a: a[1], tgt_of=lambda a: a[0],
        mul=lambda a, b: (a[0], b[1]), inv_of=lambda a: (a[1], a[0]), unit_of=lambda x: (x, x),
    ).groupoid


def group_from_table(elements: Sequence[Hashable], mul: Callable, inverse: Callable, identity: Hashable) -> FiniteGroupoid:
    """One-object groupoid of a finite group given by its multiplication."""
    return assemble(
        [0], list(elements),
        src_of=lambda a: 0, tgt_of=lambda a: 0,
        mul=mul, inv_of=inverse, unit_of=lambda x: identity,
    ).groupoid


def cyclic_group(k: int) -> FiniteGroupoid:
    if k < 1:
        raise MalformedSpecError("cyclic group needs order >= 1")
    return group_from_table(range(k), lambda a, b: (a + b) % k, lambda a: (-a) % k, 0)


def symmetric_group_3() -> FiniteGroupoid:
    """S3 as permutations of (0, 1, 2); the identity comes first."""
    elements = list(permutations(range(3)))
    return group_from_table(
        elements,
        lambda a, b: tuple(a[b[i]] for i in range(3)),
        lambda a: tuple(sorted(range(3), key=lambda i: a[i])),
        (0, 1, 2),
    )


def equivalence_relation(k: int, blocks: Sequence[Sequence[int]]) -> FiniteGroupoid:
    """The principal groupoid (graph) of the partition of 0..k-1 into blocks."""
    seen = sorted(x for block in blocks for x in block)
    if seen != list(range(k)):
        raise MalformedSpecError(f"blocks {list(map(list, blocks))} do not partition 0..{k - 1}")
    block_of = {}
    for i, block in enumerate(blocks):
        for x in block:
            block_of[x] = i
    arrows = [(t, s) for t in range(k) for s in range(k) if block_of[t] == block_of[s]]
    return assemble(
        range(k), arrows,
        src_of=lambda a: a[1], tgt_of=lambda a: a[0],
        mul=lambda a, b: (a[0], b[1]), inv_of=lambda a: (a[1], a[0]), unit_of=lambda x: (x, x),
    ).groupoid


def action_groupoid(group: FiniteGroupoid, m: int, action: Sequence[Sequence[int]]) -> FiniteGroupoid:
    """
    Action groupoid of a group acting on {0..m-1}.

    Args:
        group: a one-object groupoid.
        m: size of the set acted on.
        action: action[g][x] = g·x for every group element g.

    Returns:
        FiniteGroupoid: arrows (g, x) with src x and tgt g·x.

    Raises:
        MalformedSpecError: if the table is not a left action.
    """
    if group.n_objects != 1:
        raise MalformedSpecError("action groupoid needs a group (one object)")
    if len(action) != group.n_arrows or any(len(row) != m for row in action):
        raise MalformedSpecError("action table has the wrong shape")
    for row in action:
        for y in row:
            if not 0 <= y < m:
                raise MalformedSpecError(f"action sends a point to {y}, outside 0..{m - 1}")
    e = group.unit[0]
    if any(action[e][x] != x for x in range(m)):
        raise MalformedSpecError("not an action: the identity moves a point")
    for h in group.arrows:
        for g in group.arrows:
            hg = group.compose(h, g)
            for x in range(m):
                if action[hg][x] != action[h][action[g][x]]:
                    raise MalformedSpecError(f"not an action: ({h}*{g})·{x} != {h}·({g}·{x})")

    arrows = [(g, x) for g in group.arrows for x in range(m)]
    return assemble(
        range(m), arrows,
        src_of=lambda a: a[1],
        tgt_of=lambda a: action[a[0]][a[1]],
        mul=lambda a, b: (group.compose(a[0], b[0]), b[1]),
        inv_of=lambda a: (group.inv[a[0]], action[a[0]][a[1]]),
        unit_of=lambda x: (e, x),
    ).groupoid


def cyclic_action_groupoid(k: int, m: int, generator_images: Sequence[int]) -> FiniteGroupoid:
    """Action groupoid of Z/k on m points, the generator acting by generator_images."""
    if sorted(generator_images) != list(range(m)):
        raise MalformedSpecError(f"generator images {list(generator_images)} are not a permutation of 0..{m - 1}")
    powers = [tuple(range(m))]
    for _ in range(1, k):
        previous = powers[-1]
        powers.append(tuple(generator_images[previous[x]] for x in range(m)))
    wrapped = tuple(generator_images[powers[-1][x]] for x in range(m))
    if wrapped != tuple(range(m)):
        raise MalformedSpecError(f"not an action: the generator's order does not divide {k}")
    return action_groupoid(cyclic_group(k), m, powers)


def disjoint_union(g1: FiniteGroupoid, g2: FiniteGroupoid) -> FiniteGroupoid:
    """Objects and arrows of g1 first, then g2."""
    objects = [(0, x) for x in g1.objects] + [(1, x) for x in g2.objects]
    arrows = [(0, a) for a in g1.arrows] + [(1, a) for a in g2.arrows]
    parts = (g1, g2)
    return assemble(
        objects, arrows,
        src_of=lambda a: (a[0], parts[a[0]].src[a[1]]),
        tgt_of=lambda a: (a[0], parts[a[0]].tgt[a[1]]),
        mul=lambda a, b: (a[0], parts[a[0]].compose(a[1], b[1])),
        inv_of=lambda a: (a[0], parts[a[0]].inv[a[1]]),
        unit_of=lambda x: (x[0], parts[x[0]].unit[x[1]]),
    ).groupoid


def product(g1: FiniteGroupoid, g2: FiniteGroupoid) -> FiniteGroupoid:
    """Cartesian product; objects and arrows in lexicographic order."""
    objects = [(x, y) for x in g1.objects for y in g2.objects]
    arrows = [(a, b) for a in g1.arrows for b in g2.arrows]
    return assemble(
        objects, arrows,
        src_of=lambda a: (g1.src[a[0]], g2.src[a[1]]),
        tgt_of=lambda a: (g1.tgt[a[0]], g2.tgt[a[1]]),
        mul=lambda a, b: (g1.compose(a[0], b[0]), g2.compose(a[1], b[1])),
        inv_of=lambda a: (g1.inv[a[0]], g2.inv[a[1]]),
        unit_of=lambda x: (g1.unit[x[0]], g2.unit[x[1]]),
    ).groupoid


_STANDARD = {
    "null": null_groupoid,
    "pair": pair_groupoid,
    "cyclic": cyclic_group,
    "sym3": symmetric_group_3,
    "equivrel": equivalence_relation,
    "action": action_groupoid,
    "cyclic_action": cyclic_action_groupoid,
    "union": disjoint_union,
    "product": product,
}


def build_standard(kind: str, *args) -> FiniteGroupoid:
    """
    Build a catalog groupoid from a constructor description.

    Examples: build_standard("pair", 2), build_standard("cyclic", 4),
    build_standard("equivrel", 4, [[0, 1], [2, 3]]),
    build_standard("cyclic_action", 2, 2, [1, 0]),
    build_standard("union", g1, g2).
    """
    constructor = _STANDARD.get(kind)
    if constructor is None:
        raise MalformedSpecError(f"unknown standard groupoid '{kind}'")
    try:
        return constructor(*args)
    except TypeError as e:
        raise MalformedSpecError(f"bad arguments for '{kind}': {e}")


# Orbits and vertex groups

@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: Tuple[Tuple[int, ...], ...]
    orbit_of: Tuple[int, ...]
    representatives: Tuple[int, ...]
    vertex_arrows: Tuple[Tuple[int, ...], ...]
    vertex_groups: Tuple[FiniteGroupoid, ...]

    @property
    def count(self) -> int:
        return len(self.orbits)


def vertex_group(g: FiniteGroupoid, x: int) -> FiniteGroupoid:
    """The arrows x -> x as a one-object groupoid; labels are the arrow ids of g."""
    loops = g.loops(x)
    return group_from_table(loops, g.compose, lambda a: g.inv[a], g.unit[x])


def orbits_and_vertex_groups(g: FiniteGroupoid) -> OrbitDecomposition:
    """
    Orbits of g (connected components of "there is an arrow x -> y") with the
    lowest object of each orbit as representative and its vertex group.
    """
    orbit_of = [-1] * g.n_objects
    orbits = []
    for start in g.objects:
        if orbit_of[start] >= 0:
            continue
        index = len(orbits)
        orbit_of[start] = index
        members = [start]
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for a in g.outgoing(x):
                y = g.tgt[a]
                if orbit_of[y] < 0:
                    orbit_of[y] = index
                    members.append(y)
                    frontier.append(y)
        orbits.append(tuple(sorted(members)))

    representatives = tuple(orbit[0] for orbit in orbits)
    return OrbitDecomposition(
        orbits=tuple(orbits),
        orbit_of=tuple(orbit_of),
        representatives=representatives,
        vertex_arrows=tuple(g.loops(r) for r in representatives),
        vertex_groups=tuple(vertex_group(g, r) for r in representatives),
    )


def orbits_by_reachability(g: FiniteGroupoid) -> Tuple[Tuple[int, ...], ...]:
    """Orbits from the transitive closure of the τ-image, without using inverses."""
    reach = [[x == y for y in g.objects] for x in g.objects]
    for a in g.arrows:
        reach[g.src[a]][g.tgt[a]] = True
    for k in g.objects:
        for i in g.objects:
            if reach[i][k]:
                for j in g.objects:
                    if reach[k][j]:
                        reach[i][j] = True
    classes = []
    for x in g.objects:
        members = tuple(y for y in g.objects if reach[x][y] and reach[y][x])
        if members not in classes:
            classes.append(members)
    return tuple(classes)


def connecting_arrow(g: FiniteGroupoid, source: int, target: int) -> int:
    """Lowest-id arrow source -> target."""
    arrows = g.hom(target, source)
    if not arrows:
        raise GroupoidError(f"objects {source} and {target} lie in different orbits")
    return arrows[0]


# Classification

NOT_APPLICABLE_CLASSES = ("galois", "regular", "barre", "graphoid")


@dataclass(frozen=True)
class GroupoidClass:
    null: bool
    banal: bool
    principal: bool
    transitive: bool
    plurigroup: bool
    group: bool
    discrete_plurigroup: bool
    not_applicable: Tuple[str, ...] = NOT_APPLICABLE_CLASSES

    FLAGS = ("null", "banal", "principal", "transitive", "plurigroup", "group", "discrete_plurigroup")

    def names(self) -> Tuple[str, ...]:
        return tuple(name for name in self.FLAGS if getattr(self, name))

    def __str__(self):
        return " ".join(self.names())


def classify(g: FiniteGroupoid) -> GroupoidClass:
    """
    Special classes by properties of the unit map and the transitor.

    Topological discreteness is automatic for finite groupoids, so every
    plurigroup is a discrete plurigroup.
    """
    taus = {g.transitor(a) for a in g.arrows}
    principal = len(taus) == g.n_arrows
    transitive = len(taus) == g.n_objects * g.n_objects
    plurigroup = all(g.src[a] == g.tgt[a] for a in g.arrows)
    return GroupoidClass(
        null=g.unit_set == frozenset(g.arrows),
        banal=principal and transitive,
        principal=principal,
        transitive=transitive,
        plurigroup=plurigroup,
        group=plurigroup and g.n_objects == 1,
        discrete_plurigroup=plurigroup,
    )


def has_thin_hom_sets(g: FiniteGroupoid) -> bool:
    """Every hom-set has at most one element."""
    return all(len(g.hom(t, s)) <= 1 for t in g.objects for s in g.objects)


def element_order(g: FiniteGroupoid, a: int) -> int:
    """Order of a loop a in its vertex group."""
    if g.src[a] != g.tgt[a]:
        raise GroupoidError(f"arrow {a} is not a loop")
    e = g.unit[g.src[a]]
    power, order = a, 1
    while power != e:
        power = g.compose(a, power)
        order += 1
    return order


# Mutations (for exercising the validator)

def drop_comp_entry(g: FiniteGroupoid, a: int, b: int) -> FiniteGroupoid:
    """A copy of g with comp(a, b) removed."""
    comp = g.comp.copy()
    comp[a, b] = -1
    comp.flags.writeable = False
    return replace(g, comp=comp)


def with_inverse(g: FiniteGroupoid, a: int, b: int) -> FiniteGroupoid:
    """A copy of g with inv(a) replaced by b."""
    inv = list(g.inv)
    inv[a] = b
    return replace(g, inv=tuple(inv))
