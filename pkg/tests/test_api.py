import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest
from fastapi.testclient import TestClient

from main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").json()["api_base"] == "/api/v1"
    assert client.get("/health").json()["status"] == "healthy"
    health = client.get("/api/v1/health").json()
    assert health["service"] == "bourbakikit"
    assert "timestamp" in health


def test_status_reports_settings(client):
    response = client.get("/api/v1/status")
    assert response.status_code == 200
    assert response.json()["settings"]["generic_max_attempts"] > 0


def test_obstruction(client):
    response = client.get("/api/v1/obstruction", params={"n": 5, "i": 2})
    assert response.status_code == 200
    assert response.json()["data"]["verdict"] == "excluded"
    assert client.get("/api/v1/obstruction", params={"n": 5, "i": 5}).status_code == 400


def test_catalog_ztop(client):
    response = client.get("/api/v1/catalog/ztop", params={"n": 4, "i": 1, "j": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["metadata"]["all_checks_pass"] is True
    assert body["data"]["matches_expected"] is True
    assert body["metadata"]["kind"] == "ztop"
    assert body["metadata"]["fingerprint"] == body["data"]["fingerprint"]

    bad = client.get("/api/v1/catalog/n6z3-bad").json()
    assert bad["data"]["verdict"] is False
    assert bad["metadata"]["all_checks_pass"] is True


def test_catalog_errors(client):
    assert client.get("/api/v1/catalog/unknown", params={"n": 4}).status_code == 404
    assert client.get("/api/v1/catalog/z2").status_code == 400
    assert client.get("/api/v1/catalog/ztop", params={"n": 4}).status_code == 400
    assert client.get("/api/v1/catalog/z2", params={"n": 2}).status_code == 422

    response = client.get("/api/v1/catalog/ztop", params={"n": 5, "i": 1, "j": 7})
    assert response.status_code == 400
    assert response.json()["error_code"] == "OUT_OF_RANGE"


def test_membership(client):
    response = client.get("/api/v1/rees/membership", params={"n": 4, "a": "1,1,1,1,1"})
    assert response.status_code == 200
    body = response.json()
    assert body["in_semigroup"] is True
    assert body["cone_status"] == "interior"
    assert body["s"] == [1, 0, 0, 0]
    assert body["r"] == [1, 1, 0, 0]

    outside = client.get("/api/v1/rees/membership", params={"n": 4, "a": "0,0,0,0,1"}).json()
    assert outside["in_semigroup"] is False
    assert outside["cone_status"] == "outside"
    assert outside["r"] is None

    assert client.get("/api/v1/rees/membership", params={"n": 4, "a": "1,1"}).status_code == 400
    assert client.get("/api/v1/rees/membership", params={"n": 4, "a": "1,x,1,1,1"}).status_code == 400


def test_canonical(client):
    response = client.get("/api/v1/rees/canonical", params={"n": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["generators"] == [[1, 1, 1, 1], [1, 1, 1, 2]]
    assert body["classification"] == "type_two"
