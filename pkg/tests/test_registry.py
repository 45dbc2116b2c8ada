import json

import jsonschema
import pytest

from zetaforge import mpcore, registry
from zetaforge.errors import UnknownIdentity

REPORT_SCHEMA = {
    "type": "object",
    "required": ["run", "results", "summary"],
    "properties": {
        "run": {
            "type": "object",
            "required": ["precision_bits", "guard_bits"],
            "properties": {
                "precision_bits": {"type": "integer"},
                "guard_bits": {"type": "integer"},
            },
        },
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "eq", "status", "residual", "seconds"],
                "properties": {
                    "id": {"type": "string"},
                    "eq": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "advisory"]},
                    "residual": {"type": "string"},
                    "seconds": {"type": "number"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "advisory"],
        },
    },
}


def test_catalog_size_and_ids():
    cat = registry.catalog()
    assert len(cat) >= 60
    ids = [i.id for i in cat]
    assert len(ids) == len(set(ids))
    assert any(i.id == "EQ-4.4.167" for i in cat)
    w1 = registry._by_id("EQ-4.4.167")
    assert w1.kind == "numeric"
    assert any(i.id == "EQ-4.4.135-p1" and i.kind == "exact-rational"
               for i in cat)


def test_every_identity_cites_scope():
    allowed = set(registry.SCOPE_COVERED) | set(registry.SCOPE_SKIP)
    for ident in registry.catalog():
        assert ident.eq_tag in allowed, ident.id


def test_scope_audit_covers_everything():
    audit = registry.scope_audit()
    for tag in registry.SCOPE_COVERED:
        entry = audit[tag]
        assert entry.get("covered_by"), f"{tag} has no covering identity"
    for tag in registry.SCOPE_SKIP:
        assert audit[tag]["skipped"]


def test_verify_single_exact(ctx64):
    e = registry.verify(ctx64, "EQ-4.4.135-p1")
    assert e.status == "pass"
    assert e.residual == "0"


def test_verify_unknown_identity(ctx64):
    with pytest.raises(UnknownIdentity):
        registry.verify(ctx64, "EQ-NOPE")


def test_verify_negative_semantics(ctx64):
    e = registry.verify(ctx64, "NEG-4.4.229ni")
    assert e.status == "pass"  # value is far from pi/48


def test_empty_tag_report(ctx64):
    rep = registry.verify_all(ctx64, tags=["no-such-tag"])
    assert rep.results == []
    assert rep.counts == {"pass": 0, "fail": 0, "advisory": 0}


def test_exact_suite_all_pass(ctx64):
    rep = registry.verify_all(ctx64, tags=["exact"])
    assert rep.counts["fail"] == 0
    assert all(r.residual == "0" for r in rep.results)
    assert len(rep.results) >= 15


def test_report_schema_and_determinism(ctx64):
    rep1 = registry.verify_all(ctx64, tags=["constants"])
    rep2 = registry.verify_all(ctx64, tags=["constants"])
    d1, d2 = rep1.to_json_dict(), rep2.to_json_dict()
    jsonschema.validate(d1, REPORT_SCHEMA)
    # identical residual digits across runs
    assert [r["residual"] for r in d1["results"]] == [
        r["residual"] for r in d2["results"]]
    assert [r["id"] for r in d1["results"]] == sorted(
        r["id"] for r in d1["results"])


def test_tol_override(ctx64):
    # an absurdly tight override makes a numeric identity fail
    rep = registry.verify_all(ctx64, ids=["EQ-4.4.163"], tol_override="1e-80")
    assert rep.counts["fail"] == 1
    rep = registry.verify_all(ctx64, ids=["EQ-4.4.163"], tol_override="1e-6")
    assert rep.counts["fail"] == 0


def test_workers_give_same_report(ctx64):
    ids = ["EQ-4.4.123", "EQ-4.4.127", "EQ-4.4.169", "EQ-4.4.171"]
    seq = registry.verify_all(ctx64, ids=ids)
    par = registry.verify_all(ctx64, ids=ids, workers=4)
    assert [(r.id, r.status, r.residual) for r in seq.results] == [
        (r.id, r.status, r.residual) for r in par.results]


def test_catalog_metadata_export():
    meta = registry.catalog_metadata()
    assert len(meta) == len(registry.catalog())
    parsed = json.loads(registry.catalog_json())
    assert parsed[0]["id"] < parsed[-1]["id"]
    for row in parsed:
        assert set(row) == {"id", "eq", "kind", "tol_class", "tags",
                            "description"}
