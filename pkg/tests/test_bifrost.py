import asyncio
import json

import pytest

from bifrost import GpdSyntaxError, GpdValidationError, _shutdown_executor, bifrost
from mimir.groupoid import build_standard, cyclic_group, pair_groupoid

Z2_BLOCK = """groupoid Z
objects 1
arrow 0 0 0
arrow 1 0 0
unit 0 0
inv 0 0
inv 1 1
comp 0 0 0
comp 0 1 1
comp 1 0 1
comp 1 1 0
end
"""

DOCUMENT = """# two-object fixtures
std P2 = pair 2
std N1 = null 1
functor c : P2 -> N1
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
fraction M : N1 <- P2 -> P2
num id
den c
end
"""


@pytest.mark.parametrize("line,expected", [
    ("std G = pair 3", pair_groupoid(3)),
    ("std G = cyclic 3", cyclic_group(3)),
    ("std G = sym3", build_standard("sym3")),
    ("std G = equivrel 3 0,1 2", build_standard("equivrel", 3, [[0, 1], [2]])),
    ("std G = action cyclic 2 on 3 1,0,2", build_standard("cyclic_action", 2, 3, [1, 0, 2])),
])
def test_standard_constructors(line, expected):
    assert bifrost.parse_document(line).groupoid("G").same_as(expected)


def test_constructors_over_named_groupoids():
    doc = bifrost.parse_document("std Z = cyclic 2\nstd U = union Z Z\nstd I = induce Z along 0,0\n")
    assert doc.groupoid("U").n_objects == 2
    assert doc.groupoid("I").n_arrows == 8


def test_explicit_groupoid_block():
    assert bifrost.parse_document(Z2_BLOCK).groupoid("Z").same_as(cyclic_group(2))


def test_document_with_functors_and_a_fraction():
    doc = bifrost.parse_document(DOCUMENT)
    assert doc.names() == ["P2", "N1", "c", "id", "M"]
    assert doc.functor_ends["c"] == ("P2", "N1")
    assert doc.fraction_legs["M"] == ("id", "c")
    assert doc.fraction("M").source.same_as(doc.groupoid("N1"))


def test_serialized_document_reads_back():
    doc = bifrost.parse_document(DOCUMENT)
    again = bifrost.parse_document(bifrost.serialize_document(doc))
    assert again.names() == doc.names()
    for name, g in doc.groupoids.items():
        assert again.groupoid(name).same_as(g)
    for name, f in doc.functors.items():
        assert again.functor(name).same_maps(f)
    assert again.fraction_legs == doc.fraction_legs


def test_unknown_keyword_has_a_position():
    with pytest.raises(GpdSyntaxError) as raised:
        bifrost.parse_document("std P = pair 2\n\n   frobnicate X\n")
    assert (raised.value.line, raised.value.column) == (3, 4)
    assert str(raised.value) == "line 3, column 4: unknown keyword 'frobnicate'"


def test_bad_integer_has_a_position():
    with pytest.raises(GpdSyntaxError) as raised:
        bifrost.parse_document("std P = pair two")
    assert (raised.value.line, raised.value.column) == (1, 14)


def test_block_without_end():
    with pytest.raises(GpdSyntaxError, match="missing 'end'"):
        bifrost.parse_document(Z2_BLOCK.replace("end\n", ""))


def test_duplicate_name():
    with pytest.raises(GpdValidationError, match="name 'P' is already defined"):
        bifrost.parse_document("std P = pair 2\nstd P = null 1\n")


def test_unknown_reference():
    with pytest.raises(GpdValidationError, match="unknown groupoid 'Q'"):
        bifrost.parse_document("std P = pair 2\nfunctor f : P -> Q\nend\n")


def test_groupoid_failing_its_laws():
    broken = Z2_BLOCK.replace("inv 1 1", "inv 1 0")
    with pytest.raises(GpdValidationError, match="groupoid Z: "):
        bifrost.parse_document(broken)


def test_functor_failing_its_laws():
    text = "std P = pair 2\nfunctor f : P -> P\nobj 0 0\nobj 1 1\narr 0 0\narr 1 2\narr 2 1\narr 3 3\nend\n"
    with pytest.raises(GpdValidationError, match="functor f: src/tgt not preserved"):
        bifrost.parse_document(text)


def test_fraction_with_misplaced_legs():
    text = DOCUMENT.replace("num id\nden c", "num c\nden id")
    with pytest.raises(GpdValidationError, match="fraction M: num must run"):
        bifrost.parse_document(text)


def test_document_lookups_name_the_kind():
    doc = bifrost.parse_document(DOCUMENT)
    with pytest.raises(GpdValidationError, match="unknown fraction 'X'"):
        doc.fraction("X")
    with pytest.raises(GpdValidationError, match="unknown functor 'X'"):
        doc.functor("X")


def test_read_document(tmp_path, config):
    path = tmp_path / "fixture.gpd"
    path.write_text(DOCUMENT, encoding="utf-8")
    try:
        doc = asyncio.run(bifrost.read_document(str(path), config))
    finally:
        _shutdown_executor(config)
    assert doc.names() == ["P2", "N1", "c", "id", "M"]


def test_read_missing_document(tmp_path, config):
    try:
        with pytest.raises(FileNotFoundError):
            asyncio.run(bifrost.read_document(str(tmp_path / "absent.gpd"), config))
    finally:
        _shutdown_executor(config)


def test_read_document_with_invalid_utf8(tmp_path, config):
    path = tmp_path / "bad.gpd"
    path.write_bytes(b"std G = pair 2\n\xff\xfe\n")
    try:
        with pytest.raises(GpdSyntaxError, match="UTF-8") as raised:
            asyncio.run(bifrost.read_document(str(path), config))
    finally:
        _shutdown_executor(config)
    assert (raised.value.line, raised.value.column) == (2, 1)


def test_default_config():
    config = bifrost.load_config()
    assert config["max_arrows"] == 64
    assert config["max_construction_arrows"] == 1024
    assert config["seed"] == 7
    assert config["debug"] is False
    assert config["workers"] >= 1


def test_explicit_config_overrides_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"max_arrows": 12, "ledger_path": "runs.db"}), encoding="utf-8")
    config = bifrost.load_config(str(path))
    assert config["max_arrows"] == 12
    assert config["ledger_path"] == "runs.db"
    assert config["max_objects"] == 3


@pytest.mark.parametrize("payload,message", [
    ({"max_arrows": "many"}, "must be of type int"),
    ({"seed": True}, "must be of type int"),
    ({"max_objects": 0}, "must be positive"),
    ({"debug": "yes"}, "must be of type bool"),
    ({"ledger_path": 3}, "must be of type str"),
    ([1, 2], "must hold a JSON object"),
])
def test_invalid_config(tmp_path, payload, message):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ValueError, match=message):
        bifrost.load_config(str(path))


def test_missing_explicit_config(tmp_path):
    with pytest.raises(FileNotFoundError):
        bifrost.load_config(str(tmp_path / "absent.json"))
