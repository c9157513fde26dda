"""HTTP API contract tests against the D1 fixture."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from hyperfacet.service import create_app

from .conftest import D1_ENTITIES, store_from_entities


@pytest.fixture(scope="module")
def client():
    store = store_from_entities(D1_ENTITIES)
    return TestClient(create_app(store, cache_size=8))


def run_search(client, query) -> str:
    resp = client.post("/api/search", json=query)
    assert resp.status_code == 200
    return resp.json()["search_id"]


@pytest.fixture(scope="module")
def d1_search(client) -> str:
    return run_search(client, {"any": [{"type": "rho", "value": v} for v in ("v1", "v2", "v3")]})


class TestSchemaEndpoints:
    def test_schema(self, client):
        body = client.get("/api/schema").json()
        assert body["types"] == ["alpha", "alpha2", "rho"]
        assert body["edges"][0]["members"] == ["alpha", "alpha2", "rho"]

    def test_extract(self, client):
        resp = client.post("/api/extract", json={"types": ["alpha", "rho"]})
        body = resp.json()
        assert body["extracted"]["vertices"] == ["alpha", "rho"]
        assert body["reachability"]["edges"][0]["members"] == ["alpha", "rho"]

    def test_extract_unknown_type(self, client):
        resp = client.post("/api/extract", json={"types": ["nope"]})
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "unknown_type"

    def test_navigation_edge_count(self, client):
        resp = client.post(
            "/api/navigation",
            json={"component_edge": ["alpha", "alpha2", "rho"], "ref_types": ["rho", "alpha2"]},
        )
        body = resp.json()
        assert len(body["edges"]) == 3
        assert {tuple(e["removed_ref_set"]) for e in body["edges"]} == {
            ("rho",),
            ("alpha2",),
            ("alpha2", "rho"),
        }

    def test_navigation_empty_refs(self, client):
        resp = client.post(
            "/api/navigation", json={"component_edge": ["alpha", "rho"], "ref_types": []}
        )
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "empty_ref_set"


class TestSearchEndpoint:
    def test_search_count(self, client):
        resp = client.post("/api/search", json={"all": [{"type": "rho", "value": "v1"}]})
        assert resp.json()["count"] == 2

    def test_search_id_is_deterministic(self, client):
        q = {"all": [{"type": "rho", "value": "v1"}]}
        assert client.post("/api/search", json=q).content == client.post("/api/search", json=q).content

    def test_empty_query(self, client):
        resp = client.post("/api/search", json={})
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "empty_query"

    def test_bad_body(self, client):
        resp = client.post(
            "/api/search", content=b"not json", headers={"content-type": "application/json"}
        )
        assert resp.status_code == 400


class TestFacetEndpoint:
    def test_reduced_facet_weights(self, client, d1_search):
        resp = client.get(
            "/api/facet",
            params={"search_id": d1_search, "type": "alpha", "ref": "rho", "reduced": "true"},
        )
        body = resp.json()
        assert len(body["edges"]) == 2
        assert {e["id"]: e["weight"] for e in body["edges"]} == {"v1": 1, "v2": 2}

    def test_raw_facet(self, client, d1_search):
        body = client.get(
            "/api/facet", params={"search_id": d1_search, "type": "alpha", "ref": "rho"}
        ).json()
        assert {e["id"]: set(e["members"]) for e in body["edges"]} == {
            "v1": {"x", "y", "z"},
            "v2": {"y", "z"},
            "v3": {"y", "z"},
        }

    def test_unknown_search_is_404(self, client):
        resp = client.get(
            "/api/facet", params={"search_id": "zzz", "type": "alpha", "ref": "rho"}
        )
        assert resp.status_code == 404
        assert resp.json()["error"]["code"] == "unknown_search"

    def test_replay_is_byte_identical(self, client, d1_search):
        params = {"search_id": d1_search, "type": "alpha", "ref": "rho", "reduced": "true"}
        first = client.get("/api/facet", params=params).content
        # interleave unrelated sessions
        run_search(client, {"all": [{"type": "rho", "value": "v2"}]})
        second = client.get("/api/facet", params=params).content
        assert first == second

    def test_empty_search_short_circuits(self, client):
        sid = run_search(client, {"all": [{"type": "rho", "value": "no_such"}]})
        body = client.get(
            "/api/facet", params={"search_id": sid, "type": "alpha", "ref": "rho"}
        ).json()
        assert body == {"vertices": [], "edges": []}

    def test_top_k(self, client, d1_search):
        body = client.get(
            "/api/facet",
            params={
                "search_id": d1_search,
                "type": "alpha",
                "ref": "rho",
                "reduced": "true",
                "top_k_edges": 1,
            },
        ).json()
        assert [e["id"] for e in body["edges"]] == ["v2"]


class TestSwitchEndpoint:
    def test_d1_switch(self, client, d1_search):
        resp = client.post(
            "/api/switch",
            json={
                "search_id": d1_search,
                "ref": "rho",
                "from_type": "alpha",
                "selection": ["x"],
                "to_type": "alpha2",
            },
        )
        body = resp.json()
        assert body["s_a_count"] == 2
        assert body["reference_values"] == ["v1"]
        assert [e["members"] for e in body["facet"]["edges"]] == [["k", "m"]]

    def test_switch_errors(self, client, d1_search):
        base = {"search_id": d1_search, "ref": "rho", "from_type": "alpha", "to_type": "alpha2"}
        resp = client.post("/api/switch", json={**base, "selection": []})
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "empty_selection"
        resp = client.post("/api/switch", json={**base, "selection": ["nope"]})
        assert resp.json()["error"]["code"] == "unknown_vertex"
        resp = client.post("/api/switch", json={**base, "selection": ["x"], "to_type": "qq"})
        assert resp.json()["error"]["code"] == "unknown_type"

    def test_switch_reduced(self, client, d1_search):
        resp = client.post(
            "/api/switch",
            json={
                "search_id": d1_search,
                "ref": "rho",
                "from_type": "alpha",
                "selection": ["y"],
                "to_type": "alpha2",
                "reduced": True,
            },
        )
        body = resp.json()
        assert {e["id"]: e["weight"] for e in body["facet"]["edges"]} == {"v1": 1, "v2": 1, "v3": 1}
        assert body["s_a_count"] == 4


class TestSessionCache:
    def test_lru_eviction(self):
        store = store_from_entities(D1_ENTITIES)
        client = TestClient(create_app(store, cache_size=1))
        first = run_search(client, {"all": [{"type": "rho", "value": "v1"}]})
        run_search(client, {"all": [{"type": "rho", "value": "v2"}]})
        resp = client.get(
            "/api/facet", params={"search_id": first, "type": "alpha", "ref": "rho"}
        )
        assert resp.status_code == 404
