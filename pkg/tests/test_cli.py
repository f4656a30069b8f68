import json

import pytest
from click.testing import CliRunner

import yggdrasil
from bifrost import _shutdown_executor, bifrost
from ratatorskr import create_cli

FIXTURE = """std P2 = pair 2
std N1 = null 1
std Z2 = cyclic 2
std P3 = pair 3
functor collapse : P2 -> N1
obj 0 0
obj 1 0
arr 0 0
arr 1 0
arr 2 0
arr 3 0
end
functor id : P2 -> P2
obj 0 0
obj 1 1
arr 0 0
arr 1 1
arr 2 2
arr 3 3
end
functor swap : P2 -> P2
obj 0 1
obj 1 0
arr 0 3
arr 1 2
arr 2 1
arr 3 0
end
functor idZ : Z2 -> Z2
obj 0 0
arr 0 0
arr 1 1
end
functor zc : Z2 -> N1
obj 0 0
arr 0 0
arr 1 0
end
fraction M : N1 <- P2 -> P2
num id
den collapse
end
fraction G : P2 <- P2 -> N1
num collapse
den id
end
fraction BAD : N1 <- Z2 -> Z2
num idZ
den zc
end
"""


@pytest.fixture
def gpd(tmp_path):
    path = tmp_path / "fixture.gpd"
    path.write_text(FIXTURE, encoding="utf-8")
    return str(path)


@pytest.fixture
def run(config):
    cli = create_cli(config)
    runner = CliRunner()
    yield lambda *args: runner.invoke(cli, [str(a) for a in args])
    _shutdown_executor()


def lines(result):
    return result.output.splitlines()


def test_classify(run, gpd):
    result = run("classify", gpd, "P2")
    assert result.exit_code == 0
    assert lines(result) == ["banal principal transitive"]


def test_classify_json(run, gpd):
    result = run("classify", gpd, "Z2", "--json")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["class"] == ["transitive", "plurigroup", "group", "discrete_plurigroup"]
    assert report["summary"]["arrows"] == 2


def test_analyze_with_requirements(run, gpd):
    assert run("analyze", gpd, "collapse", "--require", "s_equivalence").exit_code == 0
    failed = run("analyze", gpd, "collapse", "--require", "actor")
    assert failed.exit_code == 1
    assert lines(failed)[-1] == "missing: actor"
    assert run("analyze", gpd, "collapse", "--require", "shiny").exit_code == 2


def test_kernel(run, gpd):
    result = run("kernel", gpd, "collapse")
    assert result.exit_code == 0
    assert lines(result) == ["kernel arrows: 0 1 2 3", "null=False principal=True uniferous=True"]


def test_holograph_written_as_gpd(run, gpd, tmp_path):
    out = tmp_path / "holograph.gpd"
    result = run("holograph", gpd, "idZ", "--output", out)
    assert result.exit_code == 0
    assert lines(result)[0].startswith("apex: 2 objects, 8 arrows")
    assert lines(result)[1] == "p exactor=True q s-equivalence=True section verified=True"
    doc = bifrost.parse_document(out.read_text(encoding="utf-8"))
    assert doc.names() == ["Z2", "idZ_holograph_apex", "idZ_holograph_p", "idZ_holograph_q", "idZ_holograph"]
    assert doc.fraction("idZ_holograph").apex.n_arrows == 8


def test_reduce(run, gpd, tmp_path):
    out = tmp_path / "reduced.gpd"
    result = run("reduce", gpd, "M", "--output", out)
    assert result.exit_code == 0
    assert lines(result)[0] == "reduced apex: 2 objects, 4 arrows, 1 orbits, vertex groups of order 1"
    assert lines(result)[2] == "terminal=True irreducible=True"
    assert "M_reduced" in bifrost.parse_document(out.read_text(encoding="utf-8")).fractions


def test_equiv(run, gpd):
    result = run("equiv", gpd, "M", "M", "--mode", "direct")
    assert result.exit_code == 0
    assert lines(result)[0] == "equivalent"
    assert run("equiv", gpd, "M", "BAD").exit_code == 3


def test_compose(run, gpd, tmp_path):
    out = tmp_path / "composite.gpd"
    result = run("compose", gpd, "M", "G", "--output", out)
    assert result.exit_code == 0
    assert lines(result) == ["composite apex: 1 objects, 1 arrows, 1 orbits, vertex groups of order 1"]
    doc = bifrost.parse_document(out.read_text(encoding="utf-8"))
    assert doc.fraction_legs["G_after_M"] == ("G_after_M_p", "G_after_M_q")


def test_compose_needs_matching_ends(run, gpd):
    assert run("compose", gpd, "M", "M").exit_code == 3


def test_bibundle(run, gpd):
    result = run("bibundle", gpd, "M")
    assert result.exit_code == 0
    assert lines(result)[0].startswith("points 2, rho 0 0, sigma")
    assert lines(result)[1] == "valid"


def test_gzprobe_outcomes(run, gpd):
    dstar = run("gzprobe", gpd, "dstar", "id", "swap", "collapse")
    assert dstar.exit_code == 1
    assert lines(dstar)[0].startswith("dstar: not found (cap 64)")
    cstar = run("gzprobe", gpd, "cstar", "collapse", "collapse")
    assert cstar.exit_code == 0
    assert lines(cstar) == ["cstar: holds (cap 1024) pullback has 4 objects, 16 arrows"]
    assert run("gzprobe", gpd, "dstar", "id", "swap", "collapse", "--max-arrows", "3").exit_code == 4


def test_gzprobe_arity(run, gpd):
    assert run("gzprobe", gpd, "cstar", "collapse").exit_code == 2


def test_morita(run, gpd):
    result = run("morita", gpd, "P3", "N1")
    assert result.exit_code == 0
    assert lines(result)[0] == "equivalent"
    refused = run("morita", gpd, "Z2", "N1")
    assert refused.exit_code == 1
    assert lines(refused) == ["not equivalent"]


def test_morita_past_the_cap(run, gpd):
    assert run("morita", gpd, "Z2", "Z2", "--max-arrows", "1").exit_code == 4


def test_pi1(run, gpd):
    result = run("pi1", gpd, "P3")
    assert result.exit_code == 0
    assert lines(result) == [
        "plurigroup: 1 objects, 1 arrows, 1 orbits, vertex groups of order 1",
        "unit meriedric equivalence=True",
    ]


def test_selftest_subset(run):
    result = run("selftest", "--max-objects", "1", "--only", "02-squares/Z2")
    assert result.exit_code == 0
    assert lines(result) == [
        "selftest seed=7 max_objects=1 max_arrows=64",
        "pass    02-squares/Z2: 8 squares",
        "total 1: 1 pass, 0 fail, 0 refused",
    ]


def test_selftest_rejects_empty_catalog(run):
    assert run("selftest", "--max-objects", "0").exit_code == 2


@pytest.mark.parametrize("text,code", [
    ("std P = pair 2\nfrobnicate\n", 2),
    ("groupoid X\nobjects 1\narrow 0 0 0\nunit 0 0\ninv 0 0\nend\n", 3),
    (b"std P = pair 2\n\xff\xfe\n", 2),
])
def test_bad_documents(run, tmp_path, text, code):
    path = tmp_path / "bad.gpd"
    if isinstance(text, bytes):
        path.write_bytes(text)
    else:
        path.write_text(text, encoding="utf-8")
    assert run("classify", path, "P").exit_code == code


def test_missing_file_and_unknown_name(run, gpd, tmp_path):
    assert run("classify", tmp_path / "absent.gpd", "P2").exit_code == 2
    assert run("classify", gpd, "P9").exit_code == 3


def test_missing_config_file(run, gpd, tmp_path):
    result = run("--config", tmp_path / "absent.json", "classify", gpd, "P2")
    assert result.exit_code == 2


def test_main_returns_exit_codes(gpd):
    assert yggdrasil.main(["classify", gpd, "P2"]) == 0
    assert yggdrasil.main(["morita", gpd, "Z2", "N1"]) == 1
    assert yggdrasil.main(["classify", gpd + ".missing", "P2"]) == 2
    assert yggdrasil.main(["no-such-command"]) == 2
