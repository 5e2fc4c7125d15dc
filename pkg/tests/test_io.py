import json

import pytest

from braceforge import (CayleyTable, MatchedPairData, PrimeField, QQ,
                        SkewBraceData, cyclic, dumps, enumerate_skew_braces,
                        functor_F, functor_Q, group_algebra, kind_of,
                        linearize, load, loads, save, symmetric_3,
                        to_document, trivial_brace)
from braceforge.errors import (CanonicalFormError, ParseError, SchemaError,
                               ShapeError)

from mutants import dual_group_hopf

F5 = PrimeField(5)


def sample_objects():
    s = enumerate_skew_braces(cyclic(4))[1]
    b = linearize(s, QQ)
    yield group_algebra(symmetric_3(), QQ)
    yield group_algebra(cyclic(4), F5)
    yield dual_group_hopf(symmetric_3(), QQ)
    yield b
    yield linearize(s, F5)
    yield functor_Q(b)
    yield functor_F(b)
    yield symmetric_3()
    yield s


def test_kind_of():
    kinds = [kind_of(o) for o in sample_objects()]
    assert kinds == ["hopf", "hopf", "hopf", "brace", "brace", "obt",
                     "matched_pair", "group", "skew_brace"]
    with pytest.raises(SchemaError):
        kind_of(42)


def test_save_load_save_is_byte_identical(tmp_path):
    for i, obj in enumerate(sample_objects()):
        p1 = tmp_path / f"a{i}.json"
        p2 = tmp_path / f"b{i}.json"
        save(obj, p1)
        save(load(p1), p2)
        assert p1.read_bytes() == p2.read_bytes()
        assert p1.read_bytes().endswith(b"\n")


def test_loads_dumps_roundtrip_object_equality():
    for obj in sample_objects():
        back = loads(dumps(obj))
        assert kind_of(back) == kind_of(obj)
        assert dumps(back) == dumps(obj)


def test_document_shape_and_canonical_text():
    h = group_algebra(cyclic(2), QQ)
    doc = to_document(h)
    assert doc["format"] == "braceforge/1"
    assert doc["kind"] == "hopf"
    assert doc["field"] == "Q"
    assert doc["dim"] == 2
    assert doc["maps"]["product"] == [["1", "0", "0", "1"], ["0", "1", "1", "0"]]
    assert doc["metadata"] == {"label": "Z2"}
    text = dumps(h)
    assert text == json.dumps(doc, sort_keys=True, indent=2) + "\n"


def test_prime_field_scalars_are_residue_strings():
    doc = to_document(group_algebra(cyclic(3), F5))
    assert doc["field"] == "Fp:5"
    assert set(sum(doc["maps"]["antipode"], [])) <= {"0", "1"}


def test_metadata_preserved_verbatim(tmp_path):
    t = CayleyTable(((0, 1), (1, 0)), 0, {"label": "Z2", "note": ["x", 1]})
    p = tmp_path / "g.json"
    save(t, p)
    back = load(p)
    assert back.meta == {"label": "Z2", "note": ["x", 1]}


def test_matched_pair_document_keys():
    s = enumerate_skew_braces(cyclic(4))[1]
    m = functor_F(linearize(s, QQ))
    doc = to_document(m)
    assert doc["dim"] == 4 and doc["dim_second"] == 4
    expected = {f"first_{k}" for k in ("unit", "product", "counit",
                                       "coproduct", "antipode")}
    expected |= {k.replace("first_", "second_") for k in expected}
    expected |= {"left_action", "right_action"}
    assert set(doc["maps"]) == expected


# -- rejection paths ----------------------------------------------------------

def hopf_doc():
    return to_document(group_algebra(cyclic(2), QQ))


def test_rejects_non_canonical_scalars():
    for bad in ("2/4", "3/1", "-0", "+1", "01", ""):
        doc = hopf_doc()
        doc["maps"]["antipode"][0][0] = bad
        with pytest.raises(CanonicalFormError):
            loads(json.dumps(doc))


def test_rejects_out_of_range_residues():
    doc = to_document(group_algebra(cyclic(2), F5))
    doc["maps"]["antipode"][0][0] = "5"
    with pytest.raises(CanonicalFormError):
        loads(json.dumps(doc))


def test_rejects_wrong_shapes():
    doc = hopf_doc()
    doc["maps"]["product"] = [["1", "0"], ["0", "1"]]
    with pytest.raises(ShapeError):
        loads(json.dumps(doc))
    doc = hopf_doc()
    doc["maps"]["unit"].append(["0"])
    with pytest.raises(ShapeError):
        loads(json.dumps(doc))


def test_rejects_schema_violations():
    doc = hopf_doc()
    doc["surprise"] = 1
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))

    doc = hopf_doc()
    del doc["maps"]["antipode"]
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))

    doc = hopf_doc()
    doc["format"] = "braceforge/2"
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))

    doc = hopf_doc()
    doc["kind"] = "bialgebra"
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))

    doc = hopf_doc()
    doc["metadata"] = "hello"
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))

    doc = hopf_doc()
    doc["maps"]["antipode"][0][0] = 1
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))

    doc = hopf_doc()
    doc["dim"] = 0
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))


def test_rejects_bad_field_spec():
    doc = hopf_doc()
    doc["field"] = "F5"
    with pytest.raises((SchemaError, ValueError)):
        loads(json.dumps(doc))


def test_rejects_bad_group_documents():
    t = to_document(symmetric_3())
    t["table"][0][0] = 9
    with pytest.raises(SchemaError):
        loads(json.dumps(t))

    t = to_document(symmetric_3())
    t["order"] = 5
    with pytest.raises(ShapeError):
        loads(json.dumps(t))


def test_parse_error_on_malformed_json(tmp_path):
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json")


def test_loaded_objects_still_pass_checks(tmp_path):
    from braceforge import check_hopf, check_obt, check_mp_over_A
    s = enumerate_skew_braces(cyclic(4))[1]
    b = linearize(s, QQ)
    for obj, checker in ((functor_Q(b), check_obt),
                         (functor_F(b), check_mp_over_A),
                         (group_algebra(symmetric_3(), F5), check_hopf)):
        p = tmp_path / "x.json"
        save(obj, p)
        assert checker(load(p)).ok
