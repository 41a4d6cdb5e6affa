"""HTTP surface of the verification service."""

import pytest
from fastapi.testclient import TestClient

from folcheck.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_cases_listing(client):
    resp = client.get("/cases", params={"filter": "appendix"})
    assert resp.status_code == 200
    ids = [c["id"] for c in resp.json()]
    assert "lemma-a3" in ids and "lemma-a8" in ids
    fast = client.get("/cases", params={"tier": "fast"}).json()
    assert all(c["tier"] == "fast" for c in fast)


def test_verify_single(client):
    resp = client.post("/verify", json={"case_id": "thm-4.2-wedge2"})
    assert resp.status_code == 200
    assert resp.json()["status"] == "pass"


def test_verify_unknown_is_404(client):
    resp = client.post("/verify", json={"case_id": "nope"})
    assert resp.status_code == 404


def test_verify_all_filtered(client):
    resp = client.post("/verify-all", json={"filter": "symplectic-lines"})
    assert resp.status_code == 200
    data = resp.json()
    assert data["all_pass"]
    assert data["counts"]["pass"] == 3


def test_verify_all_threaded(client):
    resp = client.post("/verify-all",
                       json={"filter": "legendrian-trivial", "threads": 4})
    data = resp.json()
    assert data["all_pass"]
    assert len(data["reports"]) == 4
    # report order follows case id order regardless of threading
    assert [r["id"] for r in data["reports"]] == sorted(
        r["id"] for r in data["reports"])


def test_decompose_endpoint(client):
    resp = client.post("/decompose", json={
        "rs": "A5", "weight": [0, 1, 0, 0, 0], "pipeline": ["wedge2"]})
    assert resp.status_code == 200
    data = resp.json()
    assert data["terms"] == [{"weight": [1, 0, 1, 0, 0], "mult": 1, "dim": 105}]
    assert data["total_dim"] == 105


def test_decompose_validation(client):
    resp = client.post("/decompose", json={
        "rs": "A5", "weight": [1, 0], "pipeline": []})
    assert resp.status_code == 422
    resp = client.post("/decompose", json={
        "rs": "Q9", "weight": [0], "pipeline": []})
    assert resp.status_code == 422
    resp = client.post("/decompose", json={
        "rs": "A2", "weight": [1, -1], "pipeline": []})
    assert resp.status_code == 422


def test_forms_endpoints(client):
    pencil = {
        "n": 3,
        "terms": [
            {"mono": [1, 0, 0, 0], "dx": [1], "coeff": "1"},
            {"mono": [0, 1, 0, 0], "dx": [0], "coeff": "-1"},
        ],
    }
    resp = client.post("/forms/integrable", json=pencil)
    assert resp.json() == {"radial_section": True, "lds": True,
                           "integrable": True}
    resp = client.post("/forms/psi", json=pencil)
    assert resp.json()["zero"] is True

    contact = {
        "n": 3,
        "terms": [
            {"mono": [1, 0, 0, 0], "dx": [1], "coeff": "1"},
            {"mono": [0, 1, 0, 0], "dx": [0], "coeff": "-1"},
            {"mono": [0, 0, 1, 0], "dx": [3], "coeff": "1"},
            {"mono": [0, 0, 0, 1], "dx": [2], "coeff": "-1"},
        ],
    }
    resp = client.post("/forms/psi", json=contact)
    assert resp.json()["zero"] is False
    assert len(resp.json()["terms"]) == 4


def test_pencil_endpoint(client):
    resp = client.post("/pencil/verify", json={
        "partition": [2, 1, 1], "values": ["3", "3", "3"]})
    data = resp.json()
    assert data["divides"] and data["a"] == "3"
    resp = client.post("/pencil/verify", json={
        "partition": [1, 2], "values": ["3", "3"]})
    assert resp.status_code == 422


def test_extalg_endpoints(client):
    resp = client.post("/extalg/hw", json={"tag": "w24"})
    data = resp.json()
    assert data["terms"] == [
        {"outer": [[1, 2, 3], [1, 2, 4]], "coeff": "1"}]
    assert data["weight_content"] == [2, 2, 1, 1]

    hw = client.post("/extalg/hw", json={"tag": "w6"}).json()
    resp = client.post("/extalg/rank", json={
        "n": 6, "inner_degree": 3, "terms": hw["terms"]})
    assert resp.json() == {"rank": 20, "rank_by_powers": 20}

    resp = client.post("/extalg/hw", json={"tag": "w48", "n": 4})
    assert resp.status_code == 422
