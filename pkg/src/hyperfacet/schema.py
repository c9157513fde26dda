"""Metadata-level stack: schema hypergraph over type names, extraction to a
chosen type subset, reachability from connected components, and navigation
hypergraphs from reference-type choices."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    EmptyRefSet,
    EmptySelection,
    InvalidSchema,
    RefNotInComponent,
    UnknownEdge,
    UnknownType,
)
from .hypergraph import Hyperedge, Hypergraph, connected_components, restrict, validate


@dataclass(frozen=True)
class SchemaHypergraph:
    """Hypergraph over metadata type names, with free-form labels.

    Every vertex gets a label (defaulting to its own name); edge labels
    default to the edge id. `reference_types` is advisory metadata from the
    schema file marking types commonly used as references.
    """

    carrier: Hypergraph
    vertex_labels: Mapping[str, str] = field(default_factory=dict)
    edge_labels: Mapping[str, str] = field(default_factory=dict)
    reference_types: tuple[str, ...] = ()

    def __post_init__(self):
        labels = {v: v for v in self.carrier.vertices}
        labels.update(self.vertex_labels)
        object.__setattr__(self, "vertex_labels", labels)
        elabels = {e.id: e.id for e in self.carrier.edges}
        elabels.update(self.edge_labels)
        object.__setattr__(self, "edge_labels", elabels)
        object.__setattr__(self, "reference_types", tuple(sorted(set(self.reference_types))))

    @property
    def types(self) -> tuple[str, ...]:
        return self.carrier.vertices

    def with_extra_types(self, extra: Iterable[str]) -> "SchemaHypergraph":
        """A copy with additional isolated type vertices (lenient ingest)."""
        extra = set(extra) - set(self.carrier.vertices)
        if not extra:
            return self
        carrier = Hypergraph(self.carrier.vertices + tuple(extra), self.carrier.edges)
        return SchemaHypergraph(carrier, self.vertex_labels, self.edge_labels, self.reference_types)


@dataclass(frozen=True)
class ExtractedSchema:
    carrier: Hypergraph
    selected: tuple[str, ...]


@dataclass(frozen=True)
class ReachabilityHypergraph:
    """One hyperedge per connected component of the extracted schema; types
    inside one edge can be navigated among."""

    carrier: Hypergraph


@dataclass(frozen=True)
class NavigationHypergraph:
    """Edges are the type sets visible after removing each non-empty subset
    of the chosen reference types; `edge_refs` tags each edge with its
    removed subset."""

    carrier: Hypergraph
    ref_types: tuple[str, ...]
    edge_refs: Mapping[str, tuple[str, ...]]


@dataclass(frozen=True)
class FacetPair:
    """A co-occurrence type viewed against a reference type."""

    cooc_type: str
    ref_type: str


def schema_from_dict(d: Mapping) -> SchemaHypergraph:
    """Parse the schema JSON file format:
    {"types":[...],"edges":[{"id","members","label"?}],"reference_types":[...]}.
    Type entries may be plain names or {"name","label"} objects."""
    try:
        raw_types = d["types"]
        raw_edges = d.get("edges", [])
        ref_types = d.get("reference_types", [])
    except (TypeError, KeyError) as exc:
        raise InvalidSchema(f"schema document missing required key: {exc}") from exc

    names: list[str] = []
    vlabels: dict[str, str] = {}
    for t in raw_types:
        if isinstance(t, str):
            names.append(t)
        elif isinstance(t, Mapping) and "name" in t:
            names.append(t["name"])
            if "label" in t:
                vlabels[t["name"]] = t["label"]
        else:
            raise InvalidSchema(f"bad type entry: {t!r}")

    edges = []
    elabels: dict[str, str] = {}
    for e in raw_edges:
        try:
            edges.append(Hyperedge(e["id"], tuple(e["members"])))
        except (TypeError, KeyError) as exc:
            raise InvalidSchema(f"bad edge entry {e!r}: {exc}") from exc
        if "label" in e:
            elabels[e["id"]] = e["label"]

    carrier = Hypergraph(tuple(names), tuple(edges))
    problems = validate(carrier)
    if problems:
        raise InvalidSchema("; ".join(v.message for v in problems))
    unknown_refs = sorted(set(ref_types) - carrier.vertex_set)
    if unknown_refs:
        raise InvalidSchema(f"reference_types not declared as types: {unknown_refs}")
    return SchemaHypergraph(carrier, vlabels, elabels, tuple(ref_types))


def schema_to_dict(schema: SchemaHypergraph) -> dict:
    """Inverse of schema_from_dict; labels equal to the default are elided
    so round-trips are byte-stable."""
    types: list = []
    for t in schema.carrier.vertices:
        label = schema.vertex_labels.get(t, t)
        types.append(t if label == t else {"name": t, "label": label})
    edges = []
    for e in schema.carrier.edges:
        entry: dict = {"id": e.id, "members": list(e.members)}
        label = schema.edge_labels.get(e.id, e.id)
        if label != e.id:
            entry["label"] = label
        edges.append(entry)
    return {"types": types, "edges": edges, "reference_types": list(schema.reference_types)}


def extract_schema(schema: SchemaHypergraph, u: Iterable[str]) -> ExtractedSchema:
    """Restrict the schema to the types of visual or referencing interest."""
    selected = tuple(sorted(set(u)))
    if not selected:
        raise EmptySelection("extraction requires at least one type")
    unknown = sorted(set(selected) - set(schema.types))
    if unknown:
        raise UnknownType(f"types not in schema: {unknown}")
    return ExtractedSchema(restrict(schema.carrier, selected), selected)


def build_reachability(extracted: ExtractedSchema) -> ReachabilityHypergraph:
    """One hyperedge per connected component of the extracted schema, whose
    members are the union of that component's edge images. Types outside
    every edge stay as isolated vertices with no reachability edge."""
    partition = connected_components(extracted.carrier)
    edges = []
    n = 0
    for comp in partition.components:
        if not comp.edges:
            continue
        n += 1
        edges.append(Hyperedge(f"cc{n}", comp.vertices))
    return ReachabilityHypergraph(Hypergraph(extracted.carrier.vertices, tuple(edges)))


def build_navigation(component_edge: Iterable[str], ref_types: Iterable[str]) -> NavigationHypergraph:
    """Enumerate the navigation edges for one reachability edge: every
    non-empty subset R of the reference types yields the edge e_R minus R,
    tagged with R. Exactly 2^|ref_types| - 1 edges."""
    e_r = tuple(sorted(set(component_edge)))
    refs = tuple(sorted(set(ref_types)))
    if not refs:
        raise EmptyRefSet("at least one reference type is required")
    outside = sorted(set(refs) - set(e_r))
    if outside:
        raise RefNotInComponent(f"reference types not in the component edge: {outside}")

    edges = []
    edge_refs: dict[str, tuple[str, ...]] = {}
    n = 0
    for size in range(1, len(refs) + 1):
        for removed in combinations(refs, size):
            n += 1
            edge_id = f"n{n}"
            removed_set = set(removed)
            edges.append(Hyperedge(edge_id, tuple(t for t in e_r if t not in removed_set)))
            edge_refs[edge_id] = removed
    return NavigationHypergraph(Hypergraph(e_r, tuple(edges)), refs, edge_refs)


def facet_pairs(nav: NavigationHypergraph, edge_id: str) -> tuple[FacetPair, ...]:
    """All (co-occurrence type, reference type) pairs a navigation edge
    offers: its member types against each of its removed reference types."""
    if edge_id not in nav.edge_refs:
        raise UnknownEdge(f"no navigation edge with id {edge_id!r}")
    edge = nav.carrier.edge(edge_id)
    removed = nav.edge_refs[edge_id]
    return tuple(
        FacetPair(cooc, ref) for cooc in sorted(edge.members) for ref in sorted(removed)
    )


def navigation_payload(nav: NavigationHypergraph) -> dict:
    """Canonical hypergraph JSON plus the removed reference subset per edge."""
    edges = []
    for e in nav.carrier.edges:
        edges.append(
            {
                "id": e.id,
                "members": list(e.members),
                "removed_ref_set": sorted(nav.edge_refs[e.id]),
            }
        )
    return {"vertices": list(nav.carrier.vertices), "edges": edges}
