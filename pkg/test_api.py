#!/usr/bin/env python3
"""
Test HTTP Surface
=================

Exercise the FastAPI endpoints with the test client: service info, the batch
commands and the error mapping.
"""

import pytest
from fastapi.testclient import TestClient

from api.routes import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


@pytest.fixture(scope="module")
def klein3_docs(client):
    response = client.post("/klein", json={"n": 3})
    assert response.status_code == 200
    return response.json()


def test_root_endpoint(client):
    response = client.get("/")
    assert response.status_code == 200
    data = response.json()
    assert data["status"] == "running"
    assert "foliate" in data["commands"]
    assert "serve" not in data["commands"]


def test_health_endpoint(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_validate(client, klein3_docs):
    response = client.post("/validate", json={"group": klein3_docs["group"]})
    assert response.status_code == 200
    data = response.json()
    assert data["order"] == 3
    assert data["orientable"] is True
    assert data["torsion_free"] is True


def test_validate_torsion_is_422(client):
    group = {
        "n": 1,
        "gram": [["1"]],
        "point_generators": [[[-1]]],
        "vector_system_generators": [["0"]],
    }
    response = client.post("/validate", json={"group": group})
    assert response.status_code == 422
    assert response.json()["code"] == "HAS_TORSION"


def test_reduce_matrices_only(client):
    body = {"group": {"n": 2, "point_generators": [[[0, -1], [1, 0]]]}, "matrices_only": True}
    response = client.post("/reduce", json=body)
    assert response.status_code == 200
    assert response.json()["found"] is False


def test_foliate(client, klein3_docs):
    body = {"group": klein3_docs["group"], "subspace": klein3_docs["v1"], "cosets": [["0", "0", "0"]]}
    response = client.post("/foliate", json=body)
    assert response.status_code == 200
    data = response.json()
    assert data["cosets"][0]["stabilizer_index"] == 3
    assert data["cosets"][0]["generic"] is False
    assert data["leaf_orientable"] is True


def test_intersect(client, klein3_docs):
    body = {"group": klein3_docs["group"], "v1": klein3_docs["v1"], "v2": klein3_docs["v2"], "oracle": True}
    response = client.post("/intersect", json=body)
    assert response.status_code == 200
    data = response.json()
    assert (data["t"], data["hhat"], data["m"]) == (1, 3, 3)
    assert data["oracle_agrees"] is True


def test_complement_and_decompose(client):
    rep = client.post("/regular-rep", json={"table": {"table": [[0, 1], [1, 0]], "subgroup": [0, 1]}})
    assert rep.status_code == 200
    docs = rep.json()

    response = client.post("/complement", json={"group": docs["group"], "subspace": docs["v1"]})
    assert response.status_code == 200
    assert response.json()["complement"]["basis"] == [[1, -1]]

    response = client.post("/decompose", json={"group": docs["group"]})
    assert response.status_code == 200
    assert all(f["certified"] for f in response.json()["factors"])


def test_klein_rejects_small_dimension(client):
    assert client.post("/klein", json={"n": 1}).status_code == 422


def test_reduce_bound_zero_and_negative(client):
    group = {"n": 2, "point_generators": [[[-1, 0], [0, -1]]]}
    response = client.post("/reduce", json={"group": group, "matrices_only": True, "norm_bound": 0})
    assert response.status_code == 200
    assert response.json()["found"] is False
    assert response.json()["norm_bound"] == 0

    response = client.post("/reduce", json={"group": group, "matrices_only": True, "norm_bound": -1})
    assert response.status_code == 422


def test_error_payload_shape(client):
    group = {
        "n": 1,
        "gram": [["1"]],
        "point_generators": [[[-1]]],
        "vector_system_generators": [["0"]],
    }
    response = client.post("/validate", json={"group": group})
    assert response.status_code == 422
    assert set(response.json()) == {"code", "message", "details"}
    assert response.json()["details"]["holonomy_order"] == 2
