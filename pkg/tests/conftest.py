"""Shared fixtures: the D1 four-record dataset and random dataset
generation used by the property and acceptance sweeps."""

from __future__ import annotations

import random

import pytest

from hyperfacet import DatasetStore, Hyperedge, Hypergraph, PhysicalEntity, SchemaHypergraph

# D1: four records over a reference type "rho" and two co-occurrence types
# "alpha" and "alpha2". Used throughout the facet tests.
D1_ENTITIES = {
    "r1": {"rho": {"v1"}, "alpha": {"x", "y"}, "alpha2": {"k"}},
    "r2": {"rho": {"v1", "v2"}, "alpha": {"y", "z"}, "alpha2": {"m"}},
    "r3": {"rho": {"v2"}, "alpha": {"y", "z"}, "alpha2": {"m"}},
    "r4": {"rho": {"v3"}, "alpha": {"y", "z"}},
}


def store_from_entities(entities: dict[str, dict[str, set[str]]]) -> DatasetStore:
    types = sorted({t for attrs in entities.values() for t in attrs})
    schema = SchemaHypergraph(Hypergraph(tuple(types), (Hyperedge("e1", tuple(types)),)))
    built = {
        ref: PhysicalEntity(ref, {t: frozenset(vs) for t, vs in attrs.items()})
        for ref, attrs in entities.items()
    }
    return DatasetStore(schema, built)


@pytest.fixture
def d1_store() -> DatasetStore:
    return store_from_entities(D1_ENTITIES)


def random_entities(rng: random.Random) -> dict[str, dict[str, set[str]]]:
    """A small dataset: <=5 types, <=8 refs, <=4 distinct values per type.
    Attribute sets are biased small and may be empty."""
    n_types = rng.randint(1, 5)
    n_refs = rng.randint(1, 8)
    types = [f"t{i}" for i in range(1, n_types + 1)]
    pools = {t: [f"{t}_v{j}" for j in range(1, rng.randint(1, 4) + 1)] for t in types}
    entities: dict[str, dict[str, set[str]]] = {}
    for i in range(1, n_refs + 1):
        attrs: dict[str, set[str]] = {}
        for t in types:
            k = rng.choices([0, 1, 2, 3, 4], weights=[30, 35, 20, 10, 5])[0]
            k = min(k, len(pools[t]))
            if k:
                attrs[t] = set(rng.sample(pools[t], k))
        entities[f"r{i}"] = attrs
    return entities
