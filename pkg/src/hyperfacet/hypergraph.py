"""Finite hypergraphs and the structural operations shared by every layer.

A hypergraph here is a vertex set plus an ordered *family* of hyperedges:
edge ids are unique, but distinct ids may carry identical member sets, and
the incidence map keeps them apart. Values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from ._kernels import edge_components
from .errors import UnknownEdge, UnknownVertex


def _as_members(members: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(members)))


@dataclass(frozen=True)
class Hyperedge:
    """A named hyperedge. Members are kept sorted and deduplicated."""

    id: str
    members: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", _as_members(self.members))

    @property
    def member_set(self) -> frozenset[str]:
        return frozenset(self.members)


def _as_edge(edge) -> Hyperedge:
    if isinstance(edge, Hyperedge):
        return edge
    edge_id, members = edge
    return Hyperedge(str(edge_id), members)


def edge_presorted(edge_id: str, members: tuple[str, ...]) -> Hyperedge:
    """Fast-path constructor for hot loops: members MUST already be sorted
    and deduplicated (true for kernel outputs mapped through a sorted
    vocabulary)."""
    e = object.__new__(Hyperedge)
    object.__setattr__(e, "id", edge_id)
    object.__setattr__(e, "members", members)
    return e


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph over string ids.

    Vertices and edges are canonically ordered (lexicographic ids) at
    construction so that exports are byte-stable. `allow_empty_edges` is a
    validation policy flag, not part of the graph's identity.
    """

    vertices: tuple[str, ...] = ()
    edges: tuple[Hyperedge, ...] = ()
    allow_empty_edges: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(
            self,
            "edges",
            tuple(sorted((_as_edge(e) for e in self.edges), key=lambda e: (e.id, e.members))),
        )

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @property
    def incidence(self) -> dict[str, frozenset[str]]:
        """Edge id to member set. First occurrence wins for duplicate ids
        (validate() reports those)."""
        out: dict[str, frozenset[str]] = {}
        for e in self.edges:
            out.setdefault(e.id, e.member_set)
        return out

    def edge(self, edge_id: str) -> Hyperedge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise UnknownEdge(f"no edge with id {edge_id!r}")


@dataclass(frozen=True)
class WeightedHypergraph:
    """A hypergraph with a strictly positive weight per edge."""

    base: Hypergraph
    weights: Mapping[str, float]

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))

    def weight(self, edge_id: str) -> float:
        if edge_id not in self.weights:
            raise UnknownEdge(f"no weight for edge {edge_id!r}")
        return self.weights[edge_id]


AnyHypergraph = Union[Hypergraph, WeightedHypergraph]


@dataclass(frozen=True)
class Violation:
    """One invariant violation, naming the offending vertex or edge."""

    code: str
    subject: str
    message: str


@dataclass(frozen=True)
class Component:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components: vertex sets partition the vertices, edge sets
    partition the non-empty edges, and no edge spans two components."""

    components: tuple[Component, ...]


@dataclass(frozen=True)
class RepeatedEdgeReport:
    found: bool
    pairs: tuple[tuple[str, str], ...]


def validate(h: AnyHypergraph) -> list[Violation]:
    """Check the type invariants. Diagnostics, not failures: an empty list
    means the value is well formed."""
    if isinstance(h, WeightedHypergraph):
        base, weights = h.base, h.weights
    else:
        base, weights = h, None

    out: list[Violation] = []
    vset = base.vertex_set
    for v in base.vertices:
        if not v:
            out.append(Violation("empty_vertex_id", v, "vertex id is empty"))
    seen_ids: set[str] = set()
    for e in base.edges:
        if not e.id:
            out.append(Violation("empty_edge_id", e.id, "edge id is empty"))
        if e.id in seen_ids:
            out.append(Violation("duplicate_edge_id", e.id, f"edge id {e.id!r} occurs more than once"))
        seen_ids.add(e.id)
        missing = [m for m in e.members if m not in vset]
        if missing:
            out.append(
                Violation(
                    "unknown_member",
                    e.id,
                    f"edge {e.id!r} references vertices outside the graph: {missing}",
                )
            )
        if not e.members and not base.allow_empty_edges:
            out.append(Violation("empty_edge", e.id, f"edge {e.id!r} has no members"))

    if weights is not None:
        for e in base.edges:
            if e.id not in weights:
                out.append(Violation("missing_weight", e.id, f"edge {e.id!r} has no weight"))
            elif not weights[e.id] > 0:
                out.append(
                    Violation(
                        "nonpositive_weight",
                        e.id,
                        f"edge {e.id!r} has weight {weights[e.id]!r}, expected > 0",
                    )
                )
        for edge_id in weights:
            if edge_id not in seen_ids:
                out.append(Violation("orphan_weight", edge_id, f"weight for unknown edge {edge_id!r}"))
    return out


def restrict(h: Hypergraph, u: Iterable[str], keep_empty: bool = False) -> Hypergraph:
    """Restriction to a vertex subset: each edge is intersected with `u`
    under its original id. Empty intersections are dropped unless
    `keep_empty` is set."""
    uset = set(u)
    unknown = sorted(uset - h.vertex_set)
    if unknown:
        raise UnknownVertex(f"vertices not in hypergraph: {unknown}")
    edges = []
    for e in h.edges:
        inter = tuple(m for m in e.members if m in uset)
        if inter or keep_empty:
            edges.append(Hyperedge(e.id, inter))
    return Hypergraph(tuple(sorted(uset)), tuple(edges), allow_empty_edges=h.allow_empty_edges)


def connected_components(h: Hypergraph) -> ComponentPartition:
    """Components under chains of pairwise-intersecting hyperedges.

    Isolated vertices (in no edge or only in empty edges) become singleton
    components with empty edge sets. Components are ordered by smallest
    vertex id; empty edges belong to no component.
    """
    vs = h.vertices
    vindex = {v: i for i, v in enumerate(vs)}
    rows = [[vindex[m] for m in e.members] for e in h.edges]
    vlabels, elabels = edge_components(len(vs), rows)

    comp_vertices: dict[int, list[str]] = {}
    for v, lab in zip(vs, vlabels):
        comp_vertices.setdefault(lab, []).append(v)
    comp_edges: dict[int, list[str]] = {lab: [] for lab in comp_vertices}
    for e, lab in zip(h.edges, elabels):
        if lab >= 0:
            comp_edges[lab].append(e.id)

    # labels are already assigned in sorted-vertex order, so ascending label
    # order is ordering by smallest vertex id
    components = tuple(
        Component(tuple(comp_vertices[lab]), tuple(comp_edges[lab]))
        for lab in sorted(comp_vertices)
    )
    return ComponentPartition(components)


def has_repeated_edges(h: Hypergraph) -> RepeatedEdgeReport:
    """Detect edge ids sharing one member set; witnesses list every pair."""
    groups: dict[tuple[str, ...], list[str]] = {}
    for e in h.edges:
        groups.setdefault(e.members, []).append(e.id)
    pairs: list[tuple[str, str]] = []
    for ids in groups.values():
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                pairs.append((ids[i], ids[j]))
    pairs.sort()
    return RepeatedEdgeReport(bool(pairs), tuple(pairs))


def to_canonical_dict(h: AnyHypergraph) -> dict:
    """The canonical JSON shape used by every export and API payload:
    {"vertices":[...],"edges":[{"id","members","weight"?}]}, arrays sorted."""
    if isinstance(h, WeightedHypergraph):
        base, weights = h.base, h.weights
    else:
        base, weights = h, None
    edges = []
    for e in base.edges:
        entry: dict = {"id": e.id, "members": list(e.members)}
        if weights is not None:
            entry["weight"] = weights[e.id]
        edges.append(entry)
    return {"vertices": list(base.vertices), "edges": edges}


def hypergraph_from_dict(d: Mapping) -> AnyHypergraph:
    """Inverse of to_canonical_dict (weighted iff any edge carries a weight)."""
    edges = [Hyperedge(e["id"], e["members"]) for e in d["edges"]]
    base = Hypergraph(tuple(d["vertices"]), tuple(edges))
    weights = {e["id"]: e["weight"] for e in d["edges"] if "weight" in e}
    if weights:
        return WeightedHypergraph(base, weights)
    return base


def canonical_json_bytes(payload) -> bytes:
    """Byte-stable JSON: sorted keys, compact separators, UTF-8, no
    trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode(
        "utf-8"
    )
