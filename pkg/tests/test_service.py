"""HTTP surface of the FastAPI service."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from semicover.service.app import app

EX1 = "cayley\n3\n0 2 2\n2 1 2\n2 2 2\n"
B2 = "rees0\nK 2\nL 2\ngroup cyclic 1\nmatrix\ne .\n. e\n"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_analyze(client):
    reply = client.post("/analyze", json={"text": EX1})
    assert reply.status_code == 200
    body = reply.json()
    assert body["order"] == 3
    assert body["is_inverse"] is True
    assert body["greens"]["maximal_j_classes"] == [0, 1]


def test_cover_subsemigroup(client):
    body = client.post("/cover", json={"text": EX1, "kind": "s"}).json()
    assert body["value"] == 2
    assert body["case"] == "max_class_not_generating"
    assert len(body["parts"]) == 2


def test_cover_subgroup_kind_on_semilattice(client):
    body = client.post("/cover", json={"text": EX1, "kind": "g"}).json()
    assert body["value"] == 3


def test_cover_infinite_value_is_string(client):
    body = client.post("/cover", json={"text": B2, "kind": "i"}).json()
    assert body["value"] == "infinite"
    assert "witness" in body


def test_oracle_endpoint(client):
    body = client.post("/oracle", json={"text": B2, "kind": "i"}).json()
    assert body["value"] == "infinite"
    assert body["provenance"] == "oracle"


def test_oracle_cap_exceeded(client):
    reply = client.post("/oracle", json={"text": B2, "kind": "s", "cap": 4})
    assert reply.status_code == 400
    assert reply.json()["detail"]["code"] == "cap_exceeded"


def test_parse_error_maps_to_input_error(client):
    reply = client.post("/cover", json={"text": "nonsense\n", "kind": "s"})
    assert reply.status_code == 400
    assert reply.json()["detail"]["code"] == "input_error"


def test_wrong_kind_is_input_error(client):
    # left-zero semigroup is not inverse
    reply = client.post("/cover", json={"text": "cayley\n2\n0 0\n1 1\n", "kind": "i"})
    assert reply.status_code == 400
    assert reply.json()["detail"]["code"] == "input_error"


def test_verify_round_trip(client):
    cert = client.post("/cover", json={"text": EX1, "kind": "s"}).json()
    body = client.post(
        "/verify", json={"text": EX1, "kind": "s", "certificate": cert}
    ).json()
    assert body["ok"] is True


def test_verify_rejects_wrong_carrier(client):
    cert = client.post("/cover", json={"text": EX1, "kind": "s"}).json()
    body = client.post(
        "/verify", json={"text": B2, "kind": "s", "certificate": cert}
    ).json()
    assert body["ok"] is False
    assert body["code"] == "digest_mismatch"


def test_verify_detects_mutated_part(client):
    cert = client.post("/cover", json={"text": EX1, "kind": "s"}).json()
    cert["parts"][1] = []
    body = client.post(
        "/verify", json={"text": EX1, "kind": "s", "certificate": cert}
    ).json()
    assert body["ok"] is False


def test_verify_infinite_witness(client):
    cert = client.post("/cover", json={"text": B2, "kind": "i"}).json()
    body = client.post(
        "/verify", json={"text": B2, "kind": "i", "certificate": cert}
    ).json()
    assert body["ok"] is True
    bogus = dict(cert, witness=0)  # the zero generates nothing
    body = client.post(
        "/verify", json={"text": B2, "kind": "i", "certificate": bogus}
    ).json()
    assert body["ok"] is False


def test_census(client):
    docs = [
        {"name": "ex1.sg", "text": EX1},
        {"name": "b2.sg", "text": B2},
        {"name": "null2.sg", "text": "cayley\n2\n0 0\n0 0\n"},
    ]
    body = client.post("/census", json={"documents": docs, "kind": "s"}).json()
    assert body["total"] == 3
    assert body["histogram"] == {"2": 2, "infinite": 1}
    assert sum(body["histogram"].values()) == body["total"]
    assert [entry["name"] for entry in body["results"]] == sorted(
        d["name"] for d in docs
    )
