from dataclasses import replace

import pytest

from mimir.build import ActionLaw, actor_from_action
from mimir.bibundle import bibundle_isomorphism, bibundles_equal, from_bibundle, to_bibundle, validate_bibundle
from mimir.catalog import morita_morphism
from mimir.fraction import fraction_isomorphism, gamma, make_meromorphism
from mimir.functor import Functor
from mimir.groupoid import cyclic_group

SWAP_TWO_OF_THREE = {(0, 0): 0, (0, 1): 1, (0, 2): 2, (1, 0): 1, (1, 1): 0, (1, 2): 2}


def test_morita_bibundle():
    b = to_bibundle(make_meromorphism(morita_morphism(2)))
    assert b.n_points == 2
    assert b.rho == (0, 0)
    assert sorted(b.sigma) == [0, 1]
    assert validate_bibundle(b).ok


def test_bibundle_gives_back_the_reduced_fraction():
    m = make_meromorphism(morita_morphism(2))
    assert fraction_isomorphism(from_bibundle(to_bibundle(m)), m.reduced) is not None


def test_group_identity_is_the_regular_bibundle():
    m = gamma(Functor.identity(cyclic_group(2)))
    b = to_bibundle(m)
    assert b.n_points == 2
    assert validate_bibundle(b).ok
    assert fraction_isomorphism(from_bibundle(b), m.reduced) is not None


@pytest.mark.parametrize("m", [
    make_meromorphism(morita_morphism(2)),
    make_meromorphism(morita_morphism(3)),
    gamma(Functor.identity(cyclic_group(3))),
    gamma(actor_from_action(ActionLaw(cyclic_group(2), 3, (0, 0, 0), SWAP_TWO_OF_THREE))),
])
def test_bibundle_of_a_rebuilt_fraction_matches(m):
    b = to_bibundle(m)
    rebuilt = to_bibundle(make_meromorphism(from_bibundle(b)))
    assert validate_bibundle(rebuilt).ok
    assert bibundle_isomorphism(b, rebuilt) is not None


def test_bibundles_with_different_actions_are_not_isomorphic():
    b = to_bibundle(gamma(Functor.identity(cyclic_group(3))))
    flipped = {(e, g): b.act_right(e, cyclic_group(3).inv[g]) for e, g in b.right_action}
    assert bibundle_isomorphism(b, b) == tuple(range(b.n_points))
    assert bibundle_isomorphism(b, replace(b, right_action=flipped)) is None


def test_partial_right_action_is_reported():
    b = to_bibundle(make_meromorphism(morita_morphism(2)))
    report = validate_bibundle(replace(b, right_action={}))
    assert not report.ok
    assert report.first.axiom == "right action not total"
    assert not bibundles_equal(b, replace(b, right_action={}))
