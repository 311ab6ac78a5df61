import pytest
from fastapi.testclient import TestClient
from sqlalchemy.orm import sessionmaker

from api.gateway import app
from database.db_session import get_db
from database.records import record_scan


@pytest.fixture
def client(db_engine):
    factory = sessionmaker(autocommit=False, autoflush=False, bind=db_engine)

    def override():
        db = factory()
        try:
            yield db
        finally:
            db.close()

    app.dependency_overrides[get_db] = override
    yield TestClient(app)
    app.dependency_overrides.clear()


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_analyze(client):
    response = client.post("/analyze", json={"board": "1,3,3", "m": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["r_vector"] == [1, 7, 6]
    assert body["match"] is True


def test_verify(client):
    body = client.post("/verify/mwft", json={"board": "1,2,2,3", "m": 2}).json()
    assert body["report"]["theorem"] == "mwft"
    assert body["match"] is True


def test_invalid_board(client):
    response = client.post("/analyze", json={"board": "3,1"})
    assert response.status_code == 400
    assert response.json()["detail"]["status"] == "FAIL"


def test_numeric_needs_values(client):
    response = client.post("/verify/pqmft", json={"board": "1", "mode": "numeric", "x_values": []})
    assert response.status_code == 422


def test_catalan_and_hits(client):
    stats = client.post("/catalan/stats", json={"board": "0,0,3,4", "n": 4, "m": 2}).json()
    assert stats["bounce_h"] == [2, 0, 2, 0]
    hits = client.post("/hit/mlevel", json={"board": "1,2", "n": 2, "m": 2, "check": True}).json()
    assert sum(hits["entries"]) == 8
    assert hits["match"] is True


def test_sweep(client):
    body = client.post("/sweep", json={"max_cells": 3, "m_max": 1, "n_max": 2, "suites": ["zones"]}).json()
    assert body["report"]["passed"] is True
    assert client.post("/sweep", json={"suites": []}).status_code == 422


def test_records(client, db_engine):
    assert client.get("/runs").json() == {"runs": []}
    session = sessionmaker(bind=db_engine)()
    record_scan(session, [{"board": "1", "n": 2, "m": 1, "specialize_p1": False, "negative_found": False, "witness": None}])
    session.close()
    assert client.get("/scans", params={"n": 2}).json()["records"][0]["board"] == "1"
    assert client.get("/scans", params={"n": 3}).json()["records"] == []
