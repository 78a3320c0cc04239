import json

import pytest
from hypothesis import given, strategies as st

from homassoc import GF, QQ
from homassoc.bundle import SCHEMA, Bundle, dumps_canonical, load_bundle, loads_bundle, save_bundle
from homassoc.errors import InvalidInput, MissingSection, ParseError, SchemaError, ShapeError
from homassoc.search import CATALOG_NAMES, RANDOM_KINDS, catalog, random_instance


def minimal(**changes):
    doc = {"field": "Q", "dim": 2, "mul": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]],
           "alpha": [["1", "0"], ["0", "1"]]}
    doc.update(changes)
    return doc


def test_round_trip_z2(tmp_path):
    b = catalog("z2").bundle
    path = tmp_path / "z2.json"
    save_bundle(b, path)
    again = load_bundle(path)
    assert again == b
    assert again.algebra() == b.algebra()


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_canonical_files_are_byte_stable(name, tmp_path):
    path = tmp_path / "b.json"
    save_bundle(catalog(name).bundle, path)
    first = path.read_bytes()
    save_bundle(load_bundle(path), path)
    assert path.read_bytes() == first


def test_wrong_inner_length_names_the_path():
    doc = minimal()
    doc["mul"][1][0] = ["0"]
    with pytest.raises(ShapeError) as err:
        Bundle.from_json(doc)
    assert err.value.path == "/mul/1/0"
    assert "/mul/1/0" in str(err.value)


def test_fraction_under_prime_field():
    doc = minimal(field="GF(5)")
    doc["alpha"][0][0] = "1/2"
    with pytest.raises(ParseError) as err:
        Bundle.from_json(doc)
    assert "/alpha/0/0" in str(err.value)


@pytest.mark.parametrize("doc, path", [
    (minimal(dim=7), "/dim"),
    (minimal(extra=1), "/"),
    ({"field": "Q", "dim": 2, "alpha": [["1"]]}, "/"),
    (minimal(alpha=[[1, 0], [0, 1]]), "/alpha/0/0"),
    (minimal(basis=["a"]), "/basis"),
    (minimal(basis=["a", "a"]), "/basis"),
    (minimal(format=2), "/format"),
])
def test_schema_errors_carry_pointer_paths(doc, path):
    with pytest.raises(SchemaError) as err:
        Bundle.from_json(doc)
    assert err.value.path == path
    assert path in str(err.value)


def test_not_json_and_missing_file(tmp_path):
    with pytest.raises(SchemaError) as err:
        loads_bundle("{not json")
    assert err.value.path == "/"
    with pytest.raises(SchemaError):
        load_bundle(tmp_path / "missing.json")


def test_declared_checks_are_validated():
    doc = minimal(mul=[[["0", "1"], ["1", "0"]], [["0", "0"], ["0", "0"]]], declared=["hom-algebra"])
    with pytest.raises(InvalidInput):
        loads_bundle(json.dumps(doc))
    b = loads_bundle(json.dumps(doc), validate=False)
    assert b.declared == ("hom-algebra",)


def test_missing_section():
    b = Bundle.from_json(minimal())
    with pytest.raises(MissingSection) as err:
        b.tensor("r")
    assert err.value.path == "/r"


def test_schema_is_valid_draft():
    import jsonschema

    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_canonical_layout():
    text = dumps_canonical({"b": [1, 2], "a": "x"})
    assert text == '{\n  "a": "x",\n  "b": [1,2]\n}\n'


@given(kind=st.sampled_from(RANDOM_KINDS), p=st.sampled_from([2, 3, 5]), dim=st.integers(1, 3),
       seed=st.integers(0, 10**6))
def test_random_bundles_round_trip(kind, p, dim, seed):
    b = random_instance(kind, GF(p), dim, seed)
    text = b.dumps()
    again = loads_bundle(text)
    assert again == b and again.dumps() == text


@given(seed=st.integers(0, 10**6), dim=st.integers(1, 4))
def test_rational_bundles_round_trip(seed, dim):
    b = random_instance("tensor2", QQ, dim, seed)
    assert loads_bundle(b.dumps()) == b
