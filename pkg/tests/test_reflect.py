import pytest

from mimir.build import ActionLaw, actor_from_action
from mimir.errors import PreconditionError
from mimir.fraction import gamma
from mimir.functor import Functor, constant_functor, naturally_isomorphic
from mimir.groupoid import build_standard, classify, cyclic_group, pair_groupoid
from mimir.reflect import ReflectionReport, check_reflection_universal, factors_back, fundamental_plurigroup


def swap_actor():
    z2 = cyclic_group(2)
    act = {(0, 0): 0, (0, 1): 1, (0, 2): 2, (1, 0): 1, (1, 1): 0, (1, 2): 2}
    return actor_from_action(ActionLaw(z2, 3, (0, 0, 0), act))


@pytest.mark.parametrize("g,size", [
    (pair_groupoid(3), (1, 1)),
    (build_standard("cyclic_action", 2, 3, [1, 0, 2]), (2, 3)),
    (cyclic_group(3), (1, 3)),
])
def test_fundamental_plurigroup_sizes(g, size):
    reflection = fundamental_plurigroup(g)
    assert (reflection.plurigroup.n_objects, reflection.plurigroup.n_arrows) == size
    assert classify(reflection.plurigroup).plurigroup


def test_reflection_is_idempotent():
    first = fundamental_plurigroup(build_standard("cyclic_action", 2, 3, [1, 0, 2])).plurigroup
    again = fundamental_plurigroup(first)
    assert (again.plurigroup.n_objects, again.plurigroup.n_arrows) == (first.n_objects, first.n_arrows)
    assert again.retraction.f1.is_bijective


def test_actor_factors_uniquely_through_the_plurigroup():
    actor = swap_actor()
    report = check_reflection_universal(actor.dom, actor.cod, gamma(actor))
    assert report.exists and report.unique
    assert report.candidates == 1
    assert report.collapse
    reflection = fundamental_plurigroup(actor.dom)
    assert naturally_isomorphic(reflection.retraction.then(report.functor), actor) is not None


def test_reflection_target_must_be_a_plurigroup():
    actor = swap_actor()
    with pytest.raises(PreconditionError):
        check_reflection_universal(actor.dom, pair_groupoid(2), gamma(actor))


def test_wrong_factor_does_not_factor_back():
    z3 = cyclic_group(3)
    reflection = fundamental_plurigroup(z3)
    m = gamma(Functor.identity(z3))
    right = gamma(reflection.inclusion)
    wrong = gamma(constant_functor(reflection.plurigroup, z3, 0))
    assert factors_back(reflection, right, m)
    assert not factors_back(reflection, wrong, m)


def test_report_without_factoring_back_does_not_exist():
    actor = swap_actor()
    report = check_reflection_universal(actor.dom, actor.cod, gamma(actor))
    assert report.factors_back
    broken = ReflectionReport(report.factorization, report.functor, report.candidates, report.classes, report.collapse, False)
    assert not broken.exists
    assert not ReflectionReport(None, None, 0, 0, True, True).exists
