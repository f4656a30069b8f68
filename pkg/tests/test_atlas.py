import pytest

from mimir.atlas import OrbitalAtlas, atlas_isomorphism, atlases_equivalent, common_refinement, orbital_atlas, refine_atlas
from mimir.errors import PreconditionError
from mimir.fraction import is_meriedric_equivalence, morita_equivalent
from mimir.functor import analyze_functor
from mimir.groupoid import SetMap, build_standard, cyclic_group, null_groupoid, pair_groupoid


@pytest.fixture
def swap_on_three():
    return build_standard("cyclic_action", 2, 3, [1, 0, 2])


def test_orbital_atlas_of_an_action_groupoid(swap_on_three):
    atlas = orbital_atlas(swap_on_three)
    assert atlas.orbit_space_size == 2
    assert atlas.quotient.image == (0, 0, 1)
    assert atlas.is_valid()


def test_atlas_with_wrong_fibres_is_invalid(swap_on_three):
    assert not OrbitalAtlas(swap_on_three, 2, SetMap(3, 2, (0, 1, 1))).is_valid()
    assert not OrbitalAtlas(swap_on_three, 3, SetMap(3, 3, (0, 0, 1))).is_valid()


def test_refinement_stays_an_atlas(swap_on_three):
    refined = refine_atlas(orbital_atlas(swap_on_three), SetMap(4, 3, (0, 1, 2, 2)))
    assert refined.groupoid.n_objects == 4
    assert refined.quotient.image == (0, 0, 1, 1)
    assert refined.is_valid()


def test_refinement_needs_a_surjection(swap_on_three):
    with pytest.raises(PreconditionError):
        refine_atlas(orbital_atlas(swap_on_three), SetMap(2, 3, (0, 1)))


def test_an_atlas_is_equivalent_to_its_refinement(swap_on_three):
    atlas = orbital_atlas(swap_on_three)
    refined = refine_atlas(atlas, SetMap(4, 3, (0, 1, 2, 2)))
    assert atlases_equivalent(atlas, refined)
    assert atlases_equivalent(refined, atlas)


def test_pair_groupoid_and_point_give_equivalent_atlases():
    assert atlases_equivalent(orbital_atlas(pair_groupoid(3)), orbital_atlas(null_groupoid(1)))


def test_different_vertex_groups_give_inequivalent_atlases(swap_on_three):
    other = build_standard("union", cyclic_group(2), null_groupoid(1))
    assert not atlases_equivalent(orbital_atlas(swap_on_three), orbital_atlas(other))


def test_different_orbit_spaces_are_never_equivalent():
    assert not atlases_equivalent(orbital_atlas(null_groupoid(2)), orbital_atlas(null_groupoid(1)))


def test_common_refinement_projects_by_s_equivalences():
    found = common_refinement(orbital_atlas(pair_groupoid(3)), orbital_atlas(null_groupoid(1)))
    assert found.first.groupoid.n_objects == 3
    assert found.isomorphism.f1.is_bijective
    assert analyze_functor(found.first.projection).s_equivalence
    assert analyze_functor(found.second.projection).s_equivalence


@pytest.mark.parametrize("a1,a2", [
    (orbital_atlas(pair_groupoid(3)), orbital_atlas(null_groupoid(1))),
    (orbital_atlas(null_groupoid(2)), refine_atlas(orbital_atlas(null_groupoid(2)), SetMap(3, 2, (0, 1, 1)))),
    (orbital_atlas(cyclic_group(2)), orbital_atlas(cyclic_group(2))),
])
def test_equivalent_atlases_give_isomorphic_groupoids(a1, a2):
    m = atlas_isomorphism(a1, a2)
    assert m is not None
    assert m.source.same_as(a1.groupoid) and m.target.same_as(a2.groupoid)
    assert is_meriedric_equivalence(m)
    assert morita_equivalent(a1.groupoid, a2.groupoid) is not None


def test_inequivalent_atlases_have_no_isomorphism(swap_on_three):
    other = build_standard("union", cyclic_group(2), null_groupoid(1))
    assert atlas_isomorphism(orbital_atlas(swap_on_three), orbital_atlas(other)) is None
    assert atlas_isomorphism(orbital_atlas(null_groupoid(2)), orbital_atlas(null_groupoid(1))) is None
