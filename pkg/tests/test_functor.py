import pytest
from hypothesis import given, settings, strategies as st

from mimir.catalog import catalog_functors, collapse
from mimir.errors import NotAFunctorError, PreconditionError
from mimir.functor import (
    Functor,
    NatTransformation,
    Subgroupoid,
    analyze_functor,
    compose_transformations,
    descend,
    find_section,
    holomorphism_classes,
    kernel,
    naturally_isomorphic,
    require_functor,
    validate_functor,
    whisker_left,
    whisker_right,
)
from mimir.groupoid import classify, cyclic_group, null_groupoid, pair_groupoid

functors = st.sampled_from(catalog_functors(2, seed=7))

catalog_entries = [e.functor for e in catalog_functors(2, seed=7)]

composable_pairs = st.sampled_from(catalog_entries).flatmap(
    lambda f: st.tuples(st.just(f), st.sampled_from([g for g in catalog_entries if g.dom.same_as(f.cod)]))
)

isomorphic_pairs = [
    (f, g)
    for f in catalog_entries for g in catalog_entries
    if f.dom.same_as(g.dom) and f.cod.same_as(g.cod) and naturally_isomorphic(f, g) is not None
]


def swap_on_pair2():
    g = pair_groupoid(2)
    return Functor.from_tables(g, g, [1, 0], [3, 2, 1, 0])


def test_swap_is_a_functor():
    assert validate_functor(swap_on_pair2()).ok


def test_broken_arrow_map_is_reported():
    g = pair_groupoid(2)
    report = validate_functor(Functor.from_tables(g, g, [0, 1], [0, 2, 1, 3]))
    assert report.first.axiom == "src/tgt not preserved"
    with pytest.raises(NotAFunctorError):
        require_functor(Functor.from_tables(g, g, [0, 1], [0, 2, 1, 3]))


def test_identity_has_every_flag():
    profile = analyze_functor(Functor.identity(pair_groupoid(2)))
    assert all(value for name, value in profile.as_dict().items() if name != "split")


def test_collapse_of_pair2_is_an_s_equivalence_but_not_an_actor():
    profile = analyze_functor(collapse(pair_groupoid(2)))
    assert profile.s_equivalence and profile.exactor and profile.i_faithful
    assert not profile.actor and not profile.inactor


def test_collapse_of_z2_is_an_exactor_only():
    profile = analyze_functor(collapse(cyclic_group(2)))
    assert profile.exactor and profile.s_full and profile.essentially_surjective
    assert not profile.i_faithful and not profile.equivalence


def test_unit_into_z2_is_faithful_but_not_full():
    z2 = cyclic_group(2)
    profile = analyze_functor(Functor.from_tables(null_groupoid(1), z2, [0], [0]))
    assert profile.i_faithful and profile.essentially_surjective
    assert not profile.s_full and not profile.exactor


def test_split_flag_runs_the_section_search():
    assert analyze_functor(collapse(pair_groupoid(2)), with_split=True).split is True
    assert analyze_functor(collapse(pair_groupoid(2))).split is None


@settings(max_examples=30, deadline=None)
@given(functors)
def test_actor_remarks(entry):
    profile = analyze_functor(entry.functor)
    if profile.inactor:
        assert profile.i_faithful
    if profile.actor:
        assert profile.inactor and profile.exactor
    if profile.subactor:
        assert profile.exactor


@settings(max_examples=30, deadline=None)
@given(functors)
def test_equivalence_is_full_faithful_and_essentially_surjective(entry):
    profile = analyze_functor(entry.functor)
    assert profile.equivalence == (profile.i_faithful and profile.s_full and profile.essentially_surjective)


def test_kernel_of_collapse():
    k = kernel(collapse(pair_groupoid(2)))
    assert k.arrow_ids == (0, 1, 2, 3)
    assert k.is_principal and k.is_uniferous and not k.is_null


def test_generated_subgroupoid_closes_up():
    z4 = cyclic_group(4)
    s = Subgroupoid.generated_by(z4, [2])
    assert s.arrow_ids == (0, 2)
    assert s.is_closed and s.is_uniferous
    assert Subgroupoid.generated_by(z4, [1]).arrow_ids == (0, 1, 2, 3)


def test_swap_is_naturally_isomorphic_to_identity():
    swap = swap_on_pair2()
    t = naturally_isomorphic(Functor.identity(swap.dom), swap)
    assert t is not None and t.is_natural()
    assert t.inverse().is_natural()


def test_distinct_homomorphisms_of_z2_are_not_isomorphic():
    z2 = cyclic_group(2)
    trivial = Functor.from_tables(z2, z2, [0], [0, 0])
    assert naturally_isomorphic(Functor.identity(z2), trivial) is None


def test_parallel_functors_are_required():
    with pytest.raises(PreconditionError):
        naturally_isomorphic(Functor.identity(cyclic_group(2)), Functor.identity(pair_groupoid(2)))


def test_horizontal_composition_is_natural():
    swap = swap_on_pair2()
    identity = Functor.identity(swap.dom)
    t = naturally_isomorphic(identity, swap)
    s = naturally_isomorphic(swap, identity)
    composite = compose_transformations(s, t)
    assert composite.is_natural()
    assert composite.source.same_maps(identity.then(swap))
    assert composite.target.same_maps(swap.then(identity))
    assert whisker_left(t, swap).is_natural()
    assert whisker_right(swap, t).is_natural()


def test_section_of_collapse():
    c = collapse(pair_groupoid(3))
    section = find_section(c)
    assert section.then(c).same_maps(Functor.identity(c.cod))


def test_no_section_for_a_non_split_epimorphism():
    z4, z2 = cyclic_group(4), cyclic_group(2)
    assert find_section(Functor.from_tables(z4, z2, [0], [0, 1, 0, 1])) is None


def test_descend_through_collapse():
    c = collapse(pair_groupoid(2))
    h = descend(c, c)
    assert h.same_maps(Functor.identity(c.cod))
    assert c.then(h).same_maps(c)


def test_descend_needs_constant_fibres():
    c = collapse(pair_groupoid(2))
    with pytest.raises(PreconditionError):
        descend(c, Functor.identity(pair_groupoid(2)))


def test_holomorphism_classes_of_groups_are_homomorphisms_up_to_conjugacy():
    assert len(holomorphism_classes(cyclic_group(2), cyclic_group(2))) == 2
    assert len(holomorphism_classes(null_groupoid(1), pair_groupoid(3))) == 1


def test_natural_transformation_components_are_checked():
    swap = swap_on_pair2()
    identity = Functor.identity(swap.dom)
    assert not NatTransformation(identity, swap, (0, 3)).is_natural()


def profiles(pair):
    f, g = pair
    return analyze_functor(f), analyze_functor(g), analyze_functor(f.then(g)), f


@settings(max_examples=60, deadline=None)
@given(composable_pairs)
def test_faithfulness_and_fullness_under_composition(pair):
    first, second, both, f = profiles(pair)
    if first.i_faithful and second.i_faithful:
        assert both.i_faithful
    if first.inductor and second.inductor:
        assert both.inductor
    if both.i_faithful:
        assert first.i_faithful
    if first.s_functor and first.inductor and both.i_faithful:
        assert second.i_faithful
    if first.s_functor and first.inductor and both.inductor:
        assert second.inductor
    if second.inductor:
        assert first.s_full == both.s_full
        assert first.inductor == both.inductor


@settings(max_examples=60, deadline=None)
@given(composable_pairs)
def test_s_extensors_under_composition(pair):
    first, second, both, f = profiles(pair)
    if first.s_extensor and second.s_extensor:
        assert both.s_extensor
    if second.s_equivalence and f.f0.is_surjective:
        if both.s_extensor:
            assert first.s_extensor
        if both.s_equivalence:
            assert first.s_equivalence
    if first.s_extensor:
        if both.s_extensor:
            assert second.s_extensor
        if both.s_equivalence:
            assert second.s_equivalence and first.s_equivalence


@settings(max_examples=60, deadline=None)
@given(composable_pairs)
def test_equivalences_under_composition(pair):
    first, second, both, f = profiles(pair)
    if first.equivalence and second.equivalence:
        assert both.equivalence
    if first.essentially_surjective and second.essentially_surjective:
        assert both.essentially_surjective
    if second.equivalence:
        if both.essentially_surjective:
            assert first.essentially_surjective
        if both.equivalence:
            assert first.equivalence
    if both.essentially_surjective:
        assert second.essentially_surjective
    if first.s_extensor and both.equivalence:
        assert second.equivalence and first.s_equivalence


@settings(max_examples=60, deadline=None)
@given(composable_pairs)
def test_actors_under_composition(pair):
    first, second, both, f = profiles(pair)
    if first.inactor and second.inactor:
        assert both.inactor
    if first.exactor and second.exactor:
        assert both.exactor
    if first.actor and second.actor:
        assert both.actor
    if second.actor:
        if both.exactor:
            assert first.exactor
        if both.actor:
            assert first.actor
    if first.s_exactor:
        if both.exactor:
            assert second.exactor
        if both.actor:
            assert second.actor
    if both.inactor:
        assert first.inactor


@settings(max_examples=40, deadline=None)
@given(functors)
def test_actor_equivalences_and_exactor_surjectivity(entry):
    f = entry.functor
    profile = analyze_functor(f)
    if profile.actor and profile.equivalence:
        assert f.f0.is_bijective and f.f1.is_bijective
    if profile.exactor and profile.inductor and profile.essentially_surjective:
        assert profile.s_equivalence
    if profile.exactor:
        assert profile.essentially_surjective == profile.s_exactor
    assert kernel(f).is_principal == profile.i_faithful


@settings(max_examples=40, deadline=None)
@given(functors)
def test_faithful_functors_reflect_principality(entry):
    f = entry.functor
    profile = analyze_functor(f)
    if profile.i_faithful and classify(f.cod).principal:
        assert classify(f.dom).principal
    if profile.s_full and classify(f.cod).transitive and f.dom.n_objects:
        assert classify(f.dom).transitive


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(isomorphic_pairs))
def test_flags_survive_natural_isomorphism(pair):
    first, second = (analyze_functor(f) for f in pair)
    for flag in ("i_faithful", "s_full", "inductor", "essentially_surjective", "equivalence"):
        assert getattr(first, flag) == getattr(second, flag)


def test_s_extensor_flag_is_not_invariant_under_isomorphism():
    g = pair_groupoid(2)
    constant = Functor.from_tables(g, g, [0, 0], [g.unit[0]] * g.n_arrows)
    assert naturally_isomorphic(Functor.identity(g), constant) is not None
    assert analyze_functor(Functor.identity(g)).s_extensor
    assert not analyze_functor(constant).s_extensor


@settings(max_examples=40, deadline=None)
@given(functors)
def test_fibres_of_an_s_extensor_are_kernel_double_cosets(entry):
    f = entry.functor
    if not analyze_functor(f).s_extensor:
        return
    n = kernel(f)
    for y in f.dom.arrows:
        assert n.double_coset(y) == frozenset(x for x in f.dom.arrows if f(x) == f(y))
