"""Facet pipeline: reference index, raw and reduced facets, switching."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperfacet import (
    EmptySearch,
    EmptySelection,
    FacetPair,
    SearchResult,
    UnknownType,
    UnknownVertex,
    build_raw_facet,
    build_reference_index,
    facet_payload,
    has_repeated_edges,
    plan_switch,
    reduce_facet,
    same_reference_refacet,
    switch_facet,
    validate,
)

from . import brute
from .conftest import D1_ENTITIES, random_entities, store_from_entities


def edges_by_id(carrier):
    return {e.id: set(e.members) for e in carrier.edges}


@pytest.fixture
def d1_index(d1_store):
    s = SearchResult(frozenset(d1_store.refs))
    return build_reference_index(d1_store, s, FacetPair("alpha", "rho"))


class TestReferenceIndex:
    def test_d1_values_and_refs(self, d1_index):
        assert d1_index.ref_values == ("v1", "v2", "v3")
        assert d1_index.ref_map["v1"] == frozenset({"r1", "r2"})
        assert d1_index.ref_map["v2"] == frozenset({"r2", "r3"})
        assert d1_index.ref_map["v3"] == frozenset({"r4"})

    def test_no_reference_values(self):
        store = store_from_entities({"r1": {"alpha": {"x"}, "rho": set()}})
        idx = build_reference_index(
            store, SearchResult(frozenset({"r1"})), FacetPair("alpha", "rho")
        )
        assert idx.ref_values == ()

    def test_singleton(self):
        store = store_from_entities({"r1": {"rho": {"v"}, "alpha": {"x"}}})
        idx = build_reference_index(
            store, SearchResult(frozenset({"r1"})), FacetPair("alpha", "rho")
        )
        assert idx.ref_values == ("v",)
        assert idx.ref_map["v"] == frozenset({"r1"})

    def test_empty_search_is_a_distinct_signal(self, d1_store):
        with pytest.raises(EmptySearch):
            build_reference_index(d1_store, SearchResult(frozenset()), FacetPair("alpha", "rho"))

    def test_unknown_type(self, d1_store):
        with pytest.raises(UnknownType):
            build_reference_index(
                d1_store, SearchResult(frozenset(d1_store.refs)), FacetPair("alpha", "nope")
            )


class TestRawFacet:
    def test_d1_edges(self, d1_store, d1_index):
        raw = build_raw_facet(d1_index, d1_store)
        assert raw.carrier.vertices == ("x", "y", "z")
        assert edges_by_id(raw.carrier) == {
            "v1": {"x", "y", "z"},
            "v2": {"y", "z"},
            "v3": {"y", "z"},
        }
        assert raw.edge_source == {"v1": "v1", "v2": "v2", "v3": "v3"}

    def test_d1_has_repeated_edges(self, d1_store, d1_index):
        report = has_repeated_edges(build_raw_facet(d1_index, d1_store).carrier)
        assert report.found
        assert report.pairs == (("v2", "v3"),)

    def test_all_cooc_attrs_empty(self):
        store = store_from_entities(
            {"r1": {"rho": {"v1"}, "alpha": set()}, "r2": {"rho": {"v2"}, "alpha": set()}}
        )
        idx = build_reference_index(
            store, SearchResult(frozenset(store.refs)), FacetPair("alpha", "rho")
        )
        raw = build_raw_facet(idx, store)
        assert raw.carrier.vertices == ()
        assert edges_by_id(raw.carrier) == {"v1": set(), "v2": set()}

    def test_singleton_chain(self):
        store = store_from_entities({"r1": {"rho": {"v"}, "alpha": {"x"}}})
        idx = build_reference_index(
            store, SearchResult(frozenset(store.refs)), FacetPair("alpha", "rho")
        )
        raw = build_raw_facet(idx, store)
        assert edges_by_id(raw.carrier) == {"v": {"x"}}

    def test_edge_count_is_value_count(self, d1_store, d1_index):
        raw = build_raw_facet(d1_index, d1_store)
        assert len(raw.carrier.edges) == len(d1_index.ref_values)


class TestReduceFacet:
    def test_d1_reduction(self, d1_store, d1_index):
        red = reduce_facet(build_raw_facet(d1_index, d1_store))
        assert edges_by_id(red.carrier.base) == {"v1": {"x", "y", "z"}, "v2": {"y", "z"}}
        assert red.carrier.weights == {"v1": 1, "v2": 2}
        assert red.class_map == {"v1": ("v1",), "v2": ("v2", "v3")}
        assert validate(red.carrier) == []

    def test_all_distinct_is_identity_with_unit_weights(self):
        store = store_from_entities(
            {"r1": {"rho": {"v1"}, "alpha": {"x"}}, "r2": {"rho": {"v2"}, "alpha": {"y"}}}
        )
        idx = build_reference_index(
            store, SearchResult(frozenset(store.refs)), FacetPair("alpha", "rho")
        )
        raw = build_raw_facet(idx, store)
        red = reduce_facet(raw)
        assert edges_by_id(red.carrier.base) == edges_by_id(raw.carrier)
        assert set(red.carrier.weights.values()) == {1}

    def test_all_equal_collapses_to_one(self):
        store = store_from_entities(
            {
                "r1": {"rho": {"v1", "v2", "v3"}, "alpha": {"x", "y"}},
            }
        )
        idx = build_reference_index(
            store, SearchResult(frozenset(store.refs)), FacetPair("alpha", "rho")
        )
        red = reduce_facet(build_raw_facet(idx, store))
        assert edges_by_id(red.carrier.base) == {"v1": {"x", "y"}}
        assert red.carrier.weights == {"v1": 3}
        assert red.class_map == {"v1": ("v1", "v2", "v3")}

    def test_weight_conservation(self, d1_store, d1_index):
        red = reduce_facet(build_raw_facet(d1_index, d1_store))
        assert sum(red.carrier.weights.values()) == len(d1_index.ref_values)

    def test_reducing_reduced_is_identity(self, d1_store, d1_index):
        red = reduce_facet(build_raw_facet(d1_index, d1_store))
        assert reduce_facet(red) == red


class TestSwitch:
    def test_d1_selection_x(self, d1_store, d1_index):
        current = reduce_facet(build_raw_facet(d1_index, d1_store))
        plan = plan_switch(current, d1_index, {"x"}, "alpha2")
        assert plan.edge_ids == ("v1",)
        assert plan.classes == (("v1",),)
        assert plan.ref_values == ("v1",)
        assert plan.refs == ("r1", "r2")
        switched = switch_facet(current, d1_index, {"x"}, "alpha2", d1_store)
        assert edges_by_id(switched.carrier) == {"v1": {"k", "m"}}
        assert switched.carrier.vertices == ("k", "m")

    def test_d1_selection_y(self, d1_store, d1_index):
        current = reduce_facet(build_raw_facet(d1_index, d1_store))
        plan = plan_switch(current, d1_index, {"y"}, "alpha2")
        assert plan.ref_values == ("v1", "v2", "v3")
        assert plan.refs == ("r1", "r2", "r3", "r4")
        switched = switch_facet(current, d1_index, {"y"}, "alpha2", d1_store)
        assert edges_by_id(switched.carrier) == {"v1": {"k", "m"}, "v2": {"m"}, "v3": set()}

    def test_full_selection_matches_refacet(self, d1_store, d1_index):
        current = reduce_facet(build_raw_facet(d1_index, d1_store))
        full = set(current.carrier.base.vertices)
        switched = switch_facet(current, d1_index, full, "alpha2", d1_store)
        refaceted = same_reference_refacet(d1_index, "alpha2", d1_store)
        assert switched.carrier == refaceted.carrier

    def test_switched_result_reduces(self, d1_store, d1_index):
        current = reduce_facet(build_raw_facet(d1_index, d1_store))
        red = reduce_facet(switch_facet(current, d1_index, {"y"}, "alpha2", d1_store))
        assert sum(red.carrier.weights.values()) == 3

    def test_errors(self, d1_store, d1_index):
        current = reduce_facet(build_raw_facet(d1_index, d1_store))
        with pytest.raises(EmptySelection):
            switch_facet(current, d1_index, set(), "alpha2", d1_store)
        with pytest.raises(UnknownVertex):
            switch_facet(current, d1_index, {"nope"}, "alpha2", d1_store)
        with pytest.raises(UnknownType):
            switch_facet(current, d1_index, {"x"}, "nope", d1_store)

    def test_monotone_in_selection(self, d1_store, d1_index):
        current = reduce_facet(build_raw_facet(d1_index, d1_store))
        small = plan_switch(current, d1_index, {"x"}, "alpha2")
        large = plan_switch(current, d1_index, {"x", "y"}, "alpha2")
        assert set(small.refs) <= set(large.refs)
        assert set(small.edge_ids) <= set(large.edge_ids)


class TestSameReferenceRefacet:
    def test_d1_alpha2(self, d1_store, d1_index):
        raw = same_reference_refacet(d1_index, "alpha2", d1_store)
        assert edges_by_id(raw.carrier) == {"v1": {"k", "m"}, "v2": {"m"}, "v3": set()}

    def test_target_is_reference_itself(self, d1_store, d1_index):
        raw = same_reference_refacet(d1_index, "rho", d1_store)
        for e in raw.carrier.edges:
            assert raw.edge_source[e.id] in e.members

    def test_target_equal_to_cooc_type_matches_build(self, d1_store, d1_index):
        assert same_reference_refacet(d1_index, "alpha", d1_store) == build_raw_facet(
            d1_index, d1_store
        )


class TestFacetPayload:
    def test_raw_payload(self, d1_store, d1_index):
        payload = facet_payload(build_raw_facet(d1_index, d1_store))
        assert payload["vertices"] == ["x", "y", "z"]
        assert payload["edges"][0] == {
            "id": "v1",
            "members": ["x", "y", "z"],
            "empty": False,
            "edge_source": "v1",
        }

    def test_reduced_payload_with_empty_edges(self, d1_store, d1_index):
        refacet = same_reference_refacet(d1_index, "alpha2", d1_store)
        payload = facet_payload(reduce_facet(refacet))
        flags = {e["id"]: e["empty"] for e in payload["edges"]}
        assert flags == {"v1": False, "v2": False, "v3": True}

    def test_drop_empty(self, d1_store, d1_index):
        refacet = same_reference_refacet(d1_index, "alpha2", d1_store)
        payload = facet_payload(reduce_facet(refacet), drop_empty=True)
        assert [e["id"] for e in payload["edges"]] == ["v1", "v2"]

    def test_top_k_by_weight_then_id(self, d1_store, d1_index):
        red = reduce_facet(build_raw_facet(d1_index, d1_store))
        payload = facet_payload(red, top_k_edges=1)
        assert [e["id"] for e in payload["edges"]] == ["v2"]  # weight 2 beats weight 1


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_reduction_properties(data):
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    entities = random_entities(rng)
    store = store_from_entities(entities)
    types = sorted({t for attrs in entities.values() for t in attrs})
    if len(types) < 2:
        return
    ref_type = data.draw(st.sampled_from(types))
    cooc = data.draw(st.sampled_from([t for t in types if t != ref_type]))
    index = build_reference_index(
        store, SearchResult(frozenset(entities)), FacetPair(cooc, ref_type)
    )
    raw = build_raw_facet(index, store)
    red = reduce_facet(raw)
    # weight conservation and positivity
    assert sum(red.carrier.weights.values()) == len(index.ref_values)
    assert all(w > 0 for w in red.carrier.weights.values())
    # no repeated member sets after reduction
    assert not has_repeated_edges(red.carrier.base).found
    # classes partition the reference values
    flat = [v for cls in red.class_map.values() for v in cls]
    assert sorted(flat) == list(index.ref_values)
    # weighted expansion reproduces the raw multiset
    expanded = sorted(
        e.members for e in red.carrier.base.edges for _ in range(red.carrier.weights[e.id])
    )
    assert expanded == sorted(e.members for e in raw.carrier.edges)


class TestOracleAgreement:
    def test_pipeline_matches_brute_force(self):
        rng = random.Random(99)
        for _ in range(40):
            entities = random_entities(rng)
            store = store_from_entities(entities)
            types = sorted({t for attrs in entities.values() for t in attrs})
            refs = frozenset(entities)
            search = SearchResult(refs)
            for ref_type in types:
                for cooc in types:
                    idx = build_reference_index(store, search, FacetPair(cooc, ref_type))
                    assert set(idx.ref_values) == brute.ref_values(entities, refs, ref_type)
                    raw = build_raw_facet(idx, store)
                    want_vertices, want_edges = brute.raw_facet(entities, refs, cooc, ref_type)
                    assert set(raw.carrier.vertices) == want_vertices
                    assert edges_by_id(raw.carrier) == {v: set(m) for v, m in want_edges.items()}
                    red = reduce_facet(raw)
                    want_classes = brute.reduce_raw(want_edges)
                    got_classes = {
                        frozenset(red.carrier.base.edge(eid).members): set(cls)
                        for eid, cls in red.class_map.items()
                    }
                    assert got_classes == want_classes
