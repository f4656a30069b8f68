import pytest

from mimir.catalog import collapse
from mimir.errors import PreconditionError
from mimir.functor import Functor
from mimir.groupoid import cyclic_group, pair_groupoid
from mimir.gzprobe import (
    FAILS,
    FOUND,
    HOLDS,
    INCONCLUSIVE,
    NOT_FOUND,
    cstar_probe,
    dstar_probe,
    fibre_profiles,
    gz_probe,
)


def swap_on_pair2():
    g = pair_groupoid(2)
    return Functor.from_tables(g, g, [1, 0], [3, 2, 1, 0])


@pytest.mark.parametrize("n,total,expected", [
    (2, 3, [(1, 2), (2, 1)]),
    (1, 1, [(1,)]),
    (2, 1, []),
    (0, 0, [()]),
    (3, 4, [(1, 1, 2), (1, 2, 1), (2, 1, 1)]),
])
def test_fibre_profiles(n, total, expected):
    assert list(fibre_profiles(n, total)) == expected


def test_cstar_holds_for_collapses():
    c = collapse(pair_groupoid(2))
    report = cstar_probe(c, c)
    assert report.outcome == HOLDS
    assert report.outcome != FAILS
    assert report.witness is not None
    assert report.detail == "pullback has 4 objects, 16 arrows"


def test_cstar_is_inconclusive_past_the_cap():
    c = collapse(pair_groupoid(2))
    report = cstar_probe(c, c, max_construction_arrows=3)
    assert report.outcome == INCONCLUSIVE
    assert report.cap == 3


def test_cstar_needs_an_s_equivalence():
    c = collapse(cyclic_group(2))
    with pytest.raises(PreconditionError):
        cstar_probe(c, c)


def test_dstar_finds_the_identity_for_equal_functors():
    identity = Functor.identity(pair_groupoid(2))
    report = dstar_probe(identity, identity, collapse(pair_groupoid(2)))
    assert report.outcome == FOUND
    assert report.detail == "fibre sizes [1, 1]"


def test_dstar_cannot_equalize_a_swap():
    identity = Functor.identity(pair_groupoid(2))
    report = dstar_probe(identity, swap_on_pair2(), collapse(pair_groupoid(2)))
    assert report.outcome == NOT_FOUND
    assert report.cap == 64


def test_dstar_is_inconclusive_when_nothing_fits():
    identity = Functor.identity(pair_groupoid(2))
    report = dstar_probe(identity, swap_on_pair2(), collapse(pair_groupoid(2)), max_arrows=3)
    assert report.outcome == INCONCLUSIVE


def test_dstar_needs_a_coequalized_pair():
    z2 = cyclic_group(2)
    trivial = Functor.from_tables(z2, z2, [0], [0, 0])
    with pytest.raises(PreconditionError):
        dstar_probe(Functor.identity(z2), trivial, Functor.identity(z2))


def test_gz_probe_dispatch():
    c = collapse(pair_groupoid(2))
    assert gz_probe("cstar", c, c).outcome == HOLDS
    with pytest.raises(PreconditionError):
        gz_probe("estar", c, c)
