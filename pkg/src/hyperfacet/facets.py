"""Facet visualisation hypergraphs over a search result.

For a facet (cooc type alpha against reference type rho): every reference
value groups the alpha values co-occurring under it into one hyperedge (the
raw hypergraph); identical hyperedges then merge into a reduced weighted
hypergraph whose weights count the merged reference values. Selecting
co-occurrence vertices drives the switch to another facet that shares the
same reference type.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Union

from ._kernels import group_rows, union_rows
from .errors import EmptySearch, EmptySelection, UnknownReference, UnknownType, UnknownVertex
from .hypergraph import Hyperedge, Hypergraph, WeightedHypergraph, edge_presorted
from .schema import FacetPair
from .store import DatasetStore, SearchResult


@dataclass(frozen=True)
class ReferenceIndex:
    """Reference values of a facet's rho over a search set, with the value
    -> references map reused across every facet of that reference type.

    A restricted index (produced by switching) covers only the reference
    values reachable from a selection; its value set is then a subset of
    what its own search set would regenerate.
    """

    facet: FacetPair
    search_refs: tuple[str, ...]
    ref_values: tuple[str, ...]
    ref_map: Mapping[str, frozenset[str]]
    restricted: bool = False

    def refs_of(self, value: str) -> frozenset[str]:
        return self.ref_map[value]


@dataclass(frozen=True)
class RawFacetHypergraph:
    """One hyperedge per reference value; members are the co-occurring
    values of the facet's cooc type. Empty edges are kept (a reference
    value with no co-occurrences still counts toward the class weights)."""

    carrier: Hypergraph
    facet: FacetPair
    edge_source: Mapping[str, str]


@dataclass(frozen=True)
class ReducedFacetHypergraph:
    """The raw facet with identical hyperedges merged. Edge weight equals
    its class size and `class_map` recovers the reference values behind
    each edge (needed for navigation)."""

    carrier: WeightedHypergraph
    facet: FacetPair
    class_map: Mapping[str, tuple[str, ...]]


AnyFacetHypergraph = Union[RawFacetHypergraph, ReducedFacetHypergraph]


@dataclass(frozen=True)
class SelectionSwitch:
    """A selection A on the current facet and everything derived from it:
    the touched reduced edges, their classes, the reference values, and the
    physical references that seed the target facet."""

    selection: tuple[str, ...]
    target_type: str
    edge_ids: tuple[str, ...]
    classes: tuple[tuple[str, ...], ...]
    ref_values: tuple[str, ...]
    refs: tuple[str, ...]


def build_reference_index(store: DatasetStore, s: SearchResult, facet: FacetPair) -> ReferenceIndex:
    """Scan the search set once: collect every value of the reference type
    and map each to the references it appears in."""
    for t in (facet.cooc_type, facet.ref_type):
        if t not in store.schema.types:
            raise UnknownType(f"type not in schema: {t!r}")
    refs = tuple(sorted(s.refs))
    if not refs:
        raise EmptySearch("search returned no references")
    unknown = sorted(set(refs) - set(store.refs))
    if unknown:
        raise UnknownReference(f"search references unknown to the store: {unknown}")

    value_refs: dict[str, set[str]] = {}
    for r in refs:
        for v in store.entity(r).values(facet.ref_type):
            value_refs.setdefault(v, set()).add(r)
    return ReferenceIndex(
        facet=facet,
        search_refs=refs,
        ref_values=tuple(sorted(value_refs)),
        ref_map={v: frozenset(rs) for v, rs in value_refs.items()},
    )


def build_raw_facet(index: ReferenceIndex, store: DatasetStore) -> RawFacetHypergraph:
    """Materialize the raw facet: vertex set is every cooc value over the
    search set, one edge per reference value with the union of cooc values
    over that value's references. Edge ids are the reference values."""
    alpha = index.facet.cooc_type
    refs = index.search_refs
    entity = store.entity
    vocab = sorted({v for r in refs for v in entity(r).values(alpha)})
    vocab_id = {v: i for i, v in enumerate(vocab)}
    rows = [sorted(map(vocab_id.__getitem__, entity(r).values(alpha))) for r in refs]
    ref_pos = {r: i for i, r in enumerate(refs)}
    groups = [sorted(map(ref_pos.__getitem__, index.ref_map[v])) for v in index.ref_values]

    unions = union_rows(groups, rows, len(vocab))
    # union rows are sorted ints over a sorted vocabulary, so the mapped
    # member tuples are already canonical
    edges = tuple(
        edge_presorted(value, tuple(map(vocab.__getitem__, row)))
        for value, row in zip(index.ref_values, unions)
    )
    carrier = Hypergraph(tuple(vocab), edges)
    return RawFacetHypergraph(carrier, index.facet, {v: v for v in index.ref_values})


def reduce_facet(f: AnyFacetHypergraph) -> ReducedFacetHypergraph:
    """Merge identical hyperedges into classes. Weight is the class size
    (multiplicity in the raw family) and the class id is the
    lexicographically smallest reference value of the class. Reducing an
    already-reduced facet is the identity."""
    if isinstance(f, ReducedFacetHypergraph):
        base = f.carrier.base
        sources = [tuple(f.class_map[e.id]) for e in base.edges]
    else:
        base = f.carrier
        sources = [(f.edge_source[e.id],) for e in base.edges]

    vocab_id = {v: i for i, v in enumerate(base.vertices)}
    rows = [[vocab_id[m] for m in e.members] for e in base.edges]
    gids = group_rows(rows)

    class_values: dict[int, list[str]] = {}
    class_members: dict[int, tuple[str, ...]] = {}
    for e, src, g in zip(base.edges, sources, gids):
        class_values.setdefault(g, []).extend(src)
        class_members.setdefault(g, e.members)

    edges = []
    weights: dict[str, int] = {}
    class_map: dict[str, tuple[str, ...]] = {}
    for g, values in class_values.items():
        values = sorted(values)
        rep = values[0]
        edges.append(edge_presorted(rep, class_members[g]))
        weights[rep] = len(values)
        class_map[rep] = tuple(values)
    carrier = WeightedHypergraph(Hypergraph(base.vertices, tuple(edges)), weights)
    return ReducedFacetHypergraph(carrier, f.facet, class_map)


def plan_switch(
    current: ReducedFacetHypergraph,
    index: ReferenceIndex,
    selection: Iterable[str],
    target_type: str,
) -> SelectionSwitch:
    """Derive the switch sets from a selection: the reduced edges meeting
    it, their classes, the union of those classes (the reference values),
    and the references those values map to."""
    sel = set(selection)
    if not sel:
        raise EmptySelection("selection is empty")
    base = current.carrier.base
    unknown = sorted(sel - base.vertex_set)
    if unknown:
        raise UnknownVertex(f"selection outside the facet vertex set: {unknown}")

    edge_ids = tuple(e.id for e in base.edges if sel.intersection(e.members))
    classes = tuple(tuple(current.class_map[eid]) for eid in edge_ids)
    ref_values = sorted({v for cls in classes for v in cls})
    refs = sorted({r for v in ref_values for r in index.ref_map[v]})
    return SelectionSwitch(
        selection=tuple(sorted(sel)),
        target_type=target_type,
        edge_ids=edge_ids,
        classes=classes,
        ref_values=tuple(ref_values),
        refs=tuple(refs),
    )


def restrict_index(index: ReferenceIndex, plan: SelectionSwitch) -> ReferenceIndex:
    """The reference frame of a switch: same value -> references map, cut
    down to the plan's reference values and their references."""
    return ReferenceIndex(
        facet=FacetPair(plan.target_type, index.facet.ref_type),
        search_refs=plan.refs,
        ref_values=plan.ref_values,
        ref_map={v: index.ref_map[v] for v in plan.ref_values},
        restricted=True,
    )


def switch_facet(
    current: ReducedFacetHypergraph,
    index: ReferenceIndex,
    selection: Iterable[str],
    target_type: str,
    store: DatasetStore,
) -> RawFacetHypergraph:
    """Pivot to the target facet, restricted to what co-occurred with the
    selection. The result is raw; reduce_facet applies unchanged."""
    if target_type not in store.schema.types:
        raise UnknownType(f"type not in schema: {target_type!r}")
    plan = plan_switch(current, index, selection, target_type)
    return build_raw_facet(restrict_index(index, plan), store)


def same_reference_refacet(index: ReferenceIndex, target_type: str, store: DatasetStore) -> RawFacetHypergraph:
    """Rebuild the raw facet for another cooc type against the same
    reference type, reusing the cached index (the value -> references map
    does not change between facets of one search)."""
    if target_type not in store.schema.types:
        raise UnknownType(f"type not in schema: {target_type!r}")
    return build_raw_facet(
        replace(index, facet=FacetPair(target_type, index.facet.ref_type)), store
    )


def facet_payload(
    f: AnyFacetHypergraph,
    drop_empty: bool = False,
    top_k_edges: int | None = None,
) -> dict:
    """Facet export JSON: the canonical hypergraph shape plus, per edge,
    its reference value (raw) or class and weight (reduced) and an `empty`
    flag. `drop_empty` and `top_k_edges` (by weight, then id) trim the edge
    list for display."""
    reduced = isinstance(f, ReducedFacetHypergraph)
    base = f.carrier.base if reduced else f.carrier
    edges = []
    for e in base.edges:
        entry: dict = {"id": e.id, "members": list(e.members), "empty": not e.members}
        if reduced:
            entry["class"] = list(f.class_map[e.id])
            entry["weight"] = f.carrier.weights[e.id]
        else:
            entry["edge_source"] = f.edge_source[e.id]
        edges.append(entry)
    if drop_empty:
        edges = [e for e in edges if not e["empty"]]
    if top_k_edges is not None and top_k_edges >= 0:
        ranked = sorted(edges, key=lambda e: (-e.get("weight", 1), e["id"]))[:top_k_edges]
        kept = {e["id"] for e in ranked}
        edges = [e for e in edges if e["id"] in kept]
    return {"vertices": list(base.vertices), "edges": edges}


def empty_facet_payload() -> dict:
    return {"vertices": [], "edges": []}


def facet_for_search(
    store: DatasetStore,
    s: SearchResult,
    facet: FacetPair,
    reduced: bool = False,
    drop_empty: bool = False,
    top_k_edges: int | None = None,
) -> dict:
    """End-to-end facet payload for a search; an empty search short-circuits
    to an empty facet."""
    try:
        index = build_reference_index(store, s, facet)
    except EmptySearch:
        return empty_facet_payload()
    raw = build_raw_facet(index, store)
    return facet_payload(reduce_facet(raw) if reduced else raw, drop_empty, top_k_edges)


def switch_for_search(
    store: DatasetStore,
    s: SearchResult,
    ref_type: str,
    from_type: str,
    selection: Iterable[str],
    to_type: str,
    reduced: bool = False,
    drop_empty: bool = False,
    top_k_edges: int | None = None,
) -> dict:
    """End-to-end switch: build the current reduced facet, pivot on the
    selection, and return {"facet", "s_a_count", "reference_values"}."""
    selection = list(selection)
    if not selection:
        raise EmptySelection("selection is empty")
    try:
        index = build_reference_index(store, s, FacetPair(from_type, ref_type))
    except EmptySearch:
        raise UnknownVertex(
            f"selection outside the facet vertex set: {sorted(set(selection))}"
        ) from None
    current = reduce_facet(build_raw_facet(index, store))
    if to_type not in store.schema.types:
        raise UnknownType(f"type not in schema: {to_type!r}")
    plan = plan_switch(current, index, selection, to_type)
    switched = build_raw_facet(restrict_index(index, plan), store)
    result = reduce_facet(switched) if reduced else switched
    return {
        "facet": facet_payload(result, drop_empty, top_k_edges),
        "s_a_count": len(plan.refs),
        "reference_values": list(plan.ref_values),
    }
