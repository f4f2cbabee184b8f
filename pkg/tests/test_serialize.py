import copy
import json

import pytest

from hbx.errors import InvalidInput
from hbx.serialize import dump, dumps, load, load_path


def _all(cat):
    for group in (cat.hopf, cat.braces, cat.cocycles, cat.brace_modules, cat.cocycle_modules):
        yield from group.values()


def test_every_catalog_structure_round_trips(cat):
    for obj in _all(cat):
        kind, back = load(json.loads(dumps(obj)))
        assert back == obj


def test_shipped_files_load(structures):
    kinds = {p.name: load_path(str(p))[0] for p in structures.glob("*.json")}
    assert kinds["s3_group_algebra.json"] == "hopf"
    assert kinds["skew_brace_6.json"] == "hopf_brace"
    assert kinds["cocycle_module_sigma.json"] == "cocycle_module"


def test_layout_of_a_group_algebra(cat):
    doc = dump(cat.hopf["k[C2]/Q"])
    assert doc["hopf"]["mult"] == [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    assert doc["hopf"]["comult"] == [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    assert doc["hopf"]["unit"] == [1, 0]
    assert doc["braiding"] == {"kind": "swap"}


def test_braidings_serialize(cat):
    assert dump(cat.hopf["exterior line/Q"])["braiding"] == {"kind": "sign"}
    assert dump(cat.hopf["braided line 3/F7"])["braiding"] == {"kind": "bicharacter", "N": 3, "q": 2}


def test_rationals_are_strings():
    from hbx.constructions import group_algebra, cyclic
    import dataclasses
    h = group_algebra(cyclic(2))
    h = dataclasses.replace(h, antipode=h.antipode.with_entry(0, 0, "1/2"))
    assert dump(h)["hopf"]["antipode"][0][0] == "1/2"


@pytest.fixture
def good(cat):
    return dump(cat.hopf["k[C2]/Q"])


@pytest.mark.parametrize("mutate,needle", [
    (lambda d: d["hopf"]["mult"][0][1].__setitem__(0, "1/0"), "hopf.mult' index [0, 1, 0]"),
    (lambda d: d["hopf"]["mult"][0][1].__setitem__(0, 0.5), "hopf.mult' index [0, 1, 0]"),
    (lambda d: d["hopf"].pop("counit"), "missing key 'hopf.counit'"),
    (lambda d: d["hopf"]["unit"].append(0), "'hopf.unit' has shape"),
    (lambda d: d.__setitem__("field", {"kind": "R"}), "field.kind"),
    (lambda d: d.__setitem__("field", {"kind": "Fp", "p": 6}), "6 is not prime"),
    (lambda d: d.__setitem__("braiding", {"kind": "bicharacter", "N": 3, "q": 2}), "root of unity"),
    (lambda d: d.__setitem__("cocycle", {}), "exactly one of"),
    (lambda d: d["hopf"].__setitem__("grading", []), "hopf.grading"),
])
def test_errors_name_the_key(good, mutate, needle):
    doc = copy.deepcopy(good)
    mutate(doc)
    with pytest.raises(InvalidInput) as e:
        load(doc)
    assert needle in str(e.value)


def test_degree_violation_is_an_input_error(cat):
    doc = dump(cat.hopf["exterior line/Q"])
    doc["hopf"]["antipode"][0][1] = 1
    with pytest.raises(InvalidInput, match="hopf.antipode"):
        load(doc)


def test_bad_paths(tmp_path):
    with pytest.raises(InvalidInput):
        load_path(str(tmp_path / "missing.json"))
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(InvalidInput):
        load_path(str(p))
