import pytest
from fastapi.testclient import TestClient

from zetaforge.service import create_app

ZETA3 = "1.20205690315959428539973816151144999076499"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["identities"] >= 60


def test_eval_zeta(client):
    r = client.post("/eval", json={"function": "zeta", "args": ["3"],
                                   "bits": 128})
    assert r.status_code == 200
    body = r.json()
    assert not body["exact"]
    assert body["value"].startswith(ZETA3[:30])


def test_eval_exact_rational(client):
    r = client.post("/eval", json={"function": "harmonic",
                                   "args": ["10", "1"]})
    assert r.json() == {
        "function": "harmonic", "args": ["10", "1"],
        "value": "7381/2520", "exact": True, "bits": 128,
    }


def test_eval_pi_literal(client):
    r = client.post("/eval", json={"function": "clausen",
                                   "args": ["2", "pi/2"], "bits": 64})
    assert r.status_code == 200
    assert r.json()["value"].startswith("0.9159655941772190")


def test_eval_unknown_function(client):
    r = client.post("/eval", json={"function": "airy", "args": ["1"]})
    assert r.status_code == 404


def test_eval_domain_error(client):
    r = client.post("/eval", json={"function": "zeta", "args": ["1"]})
    assert r.status_code == 400
    r = client.post("/eval", json={"function": "zeta", "args": ["3"],
                                   "bits": 8})
    assert r.status_code == 400


def test_identities_listing_and_detail(client):
    rows = client.get("/identities").json()
    assert len(rows) >= 60
    negative = client.get("/identities", params={"tag": "negative"}).json()
    assert negative and all("negative" in r["tags"] for r in negative)
    one = client.get("/identities/EQ-4.4.167").json()
    assert one["eq"] == "4.4.167"
    assert client.get("/identities/EQ-MISSING").status_code == 404


def test_verify_endpoint(client):
    r = client.post("/verify", json={
        "ids": ["EQ-4.4.123", "EQ-4.4.167"], "bits": 64})
    assert r.status_code == 200
    body = r.json()
    assert body["summary"] == {"pass": 2, "fail": 0, "advisory": 0}
    assert body["run"]["precision_bits"] == 64
    assert {row["id"] for row in body["results"]} == {
        "EQ-4.4.123", "EQ-4.4.167"}


def test_verify_unknown_ids(client):
    r = client.post("/verify", json={"ids": ["EQ-NOPE"]})
    assert r.status_code == 404


def test_audit_endpoint(client):
    audit = client.get("/audit").json()
    assert "4.4.167" in audit
    assert audit["4.4.229ii"]["skipped"]
