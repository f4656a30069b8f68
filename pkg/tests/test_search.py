import gc
import weakref

import pytest

from mimir.errors import SizeGuardError
from mimir.functor import Functor, validate_functor
from mimir.groupoid import build_standard, cyclic_group, null_groupoid, pair_groupoid
from mimir.search import are_isomorphic, component_frames, find_isomorphism, search_functors


@pytest.mark.parametrize("dom,cod,count", [
    (pair_groupoid(2), pair_groupoid(2), 4),
    (cyclic_group(2), cyclic_group(2), 2),
    (cyclic_group(3), cyclic_group(3), 3),
    (build_standard("sym3"), cyclic_group(2), 2),
    (null_groupoid(1), pair_groupoid(3), 3),
    (cyclic_group(2), null_groupoid(1), 1),
])
def test_functor_counts(dom, cod, count):
    found = list(search_functors(dom, cod))
    assert len(found) == count
    assert len(set(found)) == count
    for objects, arrows in found:
        assert validate_functor(Functor.from_tables(dom, cod, objects, arrows)).ok


def test_search_order_is_reproducible():
    g = build_standard("cyclic_action", 2, 3, [1, 0, 2])
    assert list(search_functors(g, g)) == list(search_functors(g, g))


def test_swap_action_is_the_pair_groupoid():
    swap = build_standard("cyclic_action", 2, 2, [1, 0])
    assert are_isomorphic(swap, pair_groupoid(2))


def test_isomorphism_maps_are_bijections():
    objects, arrows = find_isomorphism(build_standard("cyclic_action", 2, 2, [1, 0]), pair_groupoid(2))
    assert objects.is_bijective and arrows.is_bijective


def test_non_isomorphic_groups_of_order_four():
    z2 = cyclic_group(2)
    assert find_isomorphism(cyclic_group(4), build_standard("product", z2, z2)) is None


def test_search_refuses_past_the_cap():
    with pytest.raises(SizeGuardError) as refused:
        next(search_functors(pair_groupoid(2), pair_groupoid(2), max_arrows=3))
    assert refused.value.cap == 3
    assert "search refused" in str(refused.value)


def test_component_frames_do_not_outlive_their_groupoid():
    g = build_standard("cyclic_action", 2, 3, [1, 0, 2])
    frames = component_frames(g)
    assert [f.members for f in frames] == [(0, 1), (2,)]
    ref = weakref.ref(g)
    del g
    gc.collect()
    assert ref() is None
    assert component_frames(build_standard("cyclic_action", 2, 3, [1, 0, 2]))[0].members == (0, 1)
