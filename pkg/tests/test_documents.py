import json

import pytest

from fatcat import DocumentError, SuiteError, load_spec, parse_document, serialize_document
from fatcat.documents import BUILTINS
from fatcat.suites import run_suite


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtin_round_trip(name):
    doc = load_spec(f"builtin:{name}")
    again = parse_document(serialize_document(doc))
    assert again == doc
    assert serialize_document(again) == serialize_document(doc)


def test_builtin_bare_name_and_prefix_agree():
    assert load_spec("z2") == load_spec("builtin:z2")


def test_load_from_file(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(serialize_document(load_spec("s3")), encoding="utf-8")
    doc = load_spec(str(path))
    assert doc == load_spec("s3")
    assert run_suite(doc, "axioms").ok


def test_parse_error_reports_position():
    with pytest.raises(DocumentError) as exc:
        parse_document('{"kind": "category",\n  "objects": [,]\n}')
    assert "line 2" in str(exc.value)


def test_dangling_reference_names_the_id(tmp_path):
    body = json.loads(serialize_document(load_spec("z2")))
    body["compose"][0]["result"] = "ghost"
    with pytest.raises(DocumentError) as exc:
        parse_document(json.dumps(body))
    assert "ghost" in str(exc.value)


def test_missing_identity_is_rejected():
    body = json.loads(serialize_document(load_spec("z2")))
    del body["identities"]["*"]
    with pytest.raises(DocumentError):
        parse_document(json.dumps(body))


def test_unknown_kind_is_rejected():
    with pytest.raises(DocumentError):
        parse_document('{"kind": "sheaf"}')
    with pytest.raises(DocumentError):
        load_spec("builtin:nope")


def test_monoidal_document_loads_and_validates():
    doc = load_spec("dsum2")
    assert run_suite(doc, "coherence-base").ok
    again = parse_document(serialize_document(doc))
    assert run_suite(again, "coherence-base").ok


def test_suite_kind_mismatch_raises():
    with pytest.raises(SuiteError):
        run_suite(load_spec("z2"), "biholonomy")
    with pytest.raises(SuiteError):
        run_suite(load_spec("lat-flat-z4"), "axioms")
    with pytest.raises(SuiteError):
        run_suite(load_spec("z2"), "no-such-suite")
    with pytest.raises(SuiteError):
        run_suite(load_spec("s3"), "enrichment", predicate="no-such-predicate")
