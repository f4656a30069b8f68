import pytest

from mimir.catalog import (
    catalog_functors,
    catalog_groupoids,
    catalog_meromorphisms,
    morita_morphism,
    s_equivalence_onto,
    small_groupoids,
)
from mimir.errors import SizeGuardError
from mimir.fraction import fractions_equivalent
from mimir.functor import analyze_functor, validate_functor
from mimir.groupoid import pair_groupoid
from mimir.suites import SuiteContext, all_cases, expect, fingerprint


@pytest.fixture(scope="module")
def one_object_cases():
    return {case.name: case for case in all_cases(SuiteContext(max_objects=1))}


def test_one_object_catalog():
    assert [e.name for e in catalog_groupoids(1)] == ["null1", "Z2", "Z3", "Z4", "S3", "Z2xZ2"]
    assert [e.name for e in small_groupoids(1)] == ["null1", "Z2", "Z3", "Z4", "Z2xZ2"]


def test_catalog_respects_the_object_bound(catalog):
    assert all(g.n_objects <= 3 for g in catalog.values())
    assert "pair3" in catalog and "pair4" not in catalog


def test_functor_catalog_is_seeded():
    first = catalog_functors(1, seed=7)
    assert fingerprint(first) == fingerprint(catalog_functors(1, seed=7))
    assert all(validate_functor(e.functor).ok for e in first)


def test_functor_catalog_keeps_at_most_per_pair():
    found = catalog_functors(1, seed=3, per_pair=1)
    assert len(found) == len(small_groupoids(1)) ** 2


def test_s_equivalence_doubles_an_object():
    s = s_equivalence_onto(pair_groupoid(2), doubled=1)
    assert s.dom.n_objects == 3
    assert s.f0.image == (0, 1, 1)
    assert analyze_functor(s).s_equivalence


def test_generated_meromorphism_pairs_are_equivalent():
    generated = catalog_meromorphisms(catalog_functors(1, seed=7, per_pair=1)[:4])
    assert generated
    for base, twin in generated:
        if twin is not None:
            assert fractions_equivalent(base.meromorphism.representative, twin.meromorphism.representative)


def test_morita_morphism_ends():
    fr = morita_morphism(3)
    assert fr.source.n_arrows == 1
    assert fr.target.n_objects == 3


def test_case_names_are_unique_and_sorted(one_object_cases):
    names = list(one_object_cases)
    assert names == sorted(names)
    assert len(names) == len(set(names))
    assert {name.split("/")[0] for name in names} >= {"01-axioms", "02-squares", "09-morita", "10-gz", "12-determinism", "13-laws"}


@pytest.mark.parametrize("name,detail", [
    ("02-squares/pair2", "16 squares"),
    ("02-squares/Z2", "8 squares"),
    ("09-morita/Z2!~null1", "not equivalent"),
    ("10-gz/dstar/identity/Z2", "fibre sizes [1]"),
    ("13-laws/morita-class/null1", "principal=True transitive=True"),
    ("13-laws/morita-class/Z2", "principal=False transitive=True"),
])
def test_named_cases_hold(one_object_cases, name, detail):
    assert one_object_cases[name].run() == detail


def test_dstar_counterexample_case(one_object_cases):
    assert one_object_cases["10-gz/dstar/swap-on-pair2"].run().startswith("not found within cap 64")


def test_axiom_case_reports_the_flags(one_object_cases):
    assert one_object_cases["01-axioms/Z2"].run().startswith("transitive plurigroup group")


def test_expect_raises_with_the_message():
    expect(True, "unused")
    with pytest.raises(AssertionError, match="boom"):
        expect(False, "boom")


def test_law_cases_hold(one_object_cases):
    laws = [case for name, case in one_object_cases.items() if name.startswith("13-laws/")]
    kinds = {case.name.split("/")[1] for case in laws}
    assert {"compose", "cotransversal", "modes", "morita-class"} <= kinds
    for case in laws:
        try:
            assert isinstance(case.run(), str)
        except SizeGuardError:
            continue
