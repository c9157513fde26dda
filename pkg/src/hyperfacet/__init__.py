"""Faceted navigation over co-occurrence hypergraphs.

Layers, bottom up: generic hypergraphs (hypergraph), the metadata schema /
reachability / navigation stack (schema), dataset ingestion with inverted
indexes and snapshots (store), facet building and switching (facets), plus
an HTTP service (service) and a CLI (cli). Hot loops run on compiled
kernels with a pure-Python fallback (_kernels).
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import (
    DuplicateRef,
    EmptyQuery,
    EmptyRefSet,
    EmptySearch,
    EmptySelection,
    HyperfacetError,
    InvalidSchema,
    MalformedRecord,
    RefNotInComponent,
    SnapshotError,
    UnknownEdge,
    UnknownReference,
    UnknownSearch,
    UnknownType,
    UnknownVertex,
    VersionMismatch,
)
from .facets import (
    RawFacetHypergraph,
    ReducedFacetHypergraph,
    ReferenceIndex,
    SelectionSwitch,
    build_raw_facet,
    build_reference_index,
    facet_for_search,
    facet_payload,
    plan_switch,
    reduce_facet,
    same_reference_refacet,
    switch_facet,
    switch_for_search,
)
from .hypergraph import (
    Component,
    ComponentPartition,
    Hyperedge,
    Hypergraph,
    RepeatedEdgeReport,
    Violation,
    WeightedHypergraph,
    canonical_json_bytes,
    connected_components,
    has_repeated_edges,
    hypergraph_from_dict,
    restrict,
    to_canonical_dict,
    validate,
)
from .schema import (
    ExtractedSchema,
    FacetPair,
    NavigationHypergraph,
    ReachabilityHypergraph,
    SchemaHypergraph,
    build_navigation,
    build_reachability,
    extract_schema,
    facet_pairs,
    navigation_payload,
    schema_from_dict,
    schema_to_dict,
)
from .store import (
    DatasetStore,
    IngestReport,
    PhysicalEntity,
    RecordDocument,
    SearchQuery,
    SearchResult,
    infer_schema,
    ingest,
    load_snapshot,
    merge_stores,
    read_csv_records,
    read_jsonl,
    record_from_dict,
    save_snapshot,
    search,
)

__version__ = "0.1.0"
