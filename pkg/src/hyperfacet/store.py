"""Dataset store: record parsing, ingestion with inverted indexes, search
evaluation, schema inference, and snapshot persistence."""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateRef,
    EmptyQuery,
    MalformedRecord,
    SnapshotError,
    UnknownReference,
    UnknownType,
    VersionMismatch,
)
from .hypergraph import Hyperedge, Hypergraph, canonical_json_bytes
from .schema import SchemaHypergraph, schema_from_dict, schema_to_dict

SNAPSHOT_VERSION = 1


@dataclass(frozen=True)
class PhysicalEntity:
    """One dataset entity: a unique reference plus, per type, the set of
    values attached to it."""

    ref: str
    attrs: Mapping[str, frozenset[str]]

    def __post_init__(self):
        object.__setattr__(self, "attrs", {t: frozenset(vs) for t, vs in self.attrs.items()})

    def values(self, type_name: str) -> frozenset[str]:
        return self.attrs.get(type_name, frozenset())


@dataclass(frozen=True)
class SearchResult:
    refs: frozenset[str]

    def __len__(self) -> int:
        return len(self.refs)


@dataclass(frozen=True)
class RecordDocument:
    """Raw ingest record. Values are non-empty strings; duplicates within
    one attribute list collapse to a set."""

    ref: str
    attrs: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        object.__setattr__(
            self, "attrs", {t: tuple(sorted(set(vs))) for t, vs in self.attrs.items()}
        )


def _coerce_value(value, where: str) -> str:
    # numeric values are stringified at ingestion; everything else must be a
    # non-empty string
    if isinstance(value, bool) or value is None:
        raise MalformedRecord(f"{where}: unsupported value {value!r}")
    if isinstance(value, (int, float)):
        value = str(value)
    if not isinstance(value, str):
        raise MalformedRecord(f"{where}: unsupported value {value!r}")
    if not value:
        raise MalformedRecord(f"{where}: empty value")
    return value


def record_from_dict(obj, normalize: bool = False) -> RecordDocument:
    """Parse one JSONL object {"ref":...,"attrs":{type:[values...]}}.
    `normalize` lowercases and trims values (and drops none; a value that
    trims to empty is malformed)."""
    if not isinstance(obj, Mapping):
        raise MalformedRecord(f"record is not an object: {obj!r}")
    ref = obj.get("ref")
    if not isinstance(ref, str) or not ref:
        raise MalformedRecord(f"record has no usable ref: {obj!r}")
    raw_attrs = obj.get("attrs", {})
    if not isinstance(raw_attrs, Mapping):
        raise MalformedRecord(f"record {ref!r}: attrs is not an object")
    attrs: dict[str, tuple[str, ...]] = {}
    for type_name, values in raw_attrs.items():
        if not isinstance(type_name, str) or not type_name:
            raise MalformedRecord(f"record {ref!r}: bad type name {type_name!r}")
        if isinstance(values, (str, int, float)):
            values = [values]
        if not isinstance(values, (list, tuple)):
            raise MalformedRecord(f"record {ref!r}, type {type_name!r}: values must be a list")
        coerced = []
        for v in values:
            v = _coerce_value(v, f"record {ref!r}, type {type_name!r}")
            if normalize:
                v = v.strip().lower()
                if not v:
                    raise MalformedRecord(
                        f"record {ref!r}, type {type_name!r}: value normalizes to empty"
                    )
            coerced.append(v)
        attrs[type_name] = tuple(coerced)
    return RecordDocument(ref, attrs)


def read_jsonl(path) -> Iterator[dict]:
    """Yield parsed objects from a JSON Lines file; blank lines skipped."""
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(f"{path}:{lineno}: invalid JSON: {exc}") from exc


def read_csv_records(path, list_sep: str = ";", ref_column: str = "ref") -> Iterator[dict]:
    """CSV adapter: columns are types, cells hold `list_sep`-separated
    values, and `ref_column` holds the reference."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or ref_column not in reader.fieldnames:
            raise MalformedRecord(f"{path}: missing {ref_column!r} column")
        for row in reader:
            attrs = {}
            for col, cell in row.items():
                if col == ref_column or cell is None:
                    continue
                values = [v.strip() for v in cell.split(list_sep) if v.strip()]
                if values:
                    attrs[col] = values
            yield {"ref": row[ref_column], "attrs": attrs}


@dataclass
class IngestReport:
    records_read: int = 0
    entities: int = 0
    duplicates_ignored: int = 0
    values_per_type: dict[str, int] = field(default_factory=dict)
    unknown_type_occurrences: dict[str, int] = field(default_factory=dict)
    schema_types_without_instances: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "records_read": self.records_read,
            "entities": self.entities,
            "duplicates_ignored": self.duplicates_ignored,
            "values_per_type": dict(sorted(self.values_per_type.items())),
            "unknown_type_occurrences": dict(sorted(self.unknown_type_occurrences.items())),
            "schema_types_without_instances": sorted(self.schema_types_without_instances),
        }


class DatasetStore:
    """Sealed dataset: entities keyed by reference plus the inverted
    (type, value) -> references index. Never mutated after construction;
    any number of readers may share one instance."""

    def __init__(
        self,
        schema: SchemaHypergraph,
        entities: Mapping[str, PhysicalEntity],
        ref_type: str | None = None,
    ):
        self.schema = schema
        self.entities: dict[str, PhysicalEntity] = dict(sorted(entities.items()))
        self.ref_type = ref_type
        self.inverted: dict[tuple[str, str], frozenset[str]] = self._transpose(self.entities)

    @staticmethod
    def _transpose(entities: Mapping[str, PhysicalEntity]) -> dict[tuple[str, str], frozenset[str]]:
        acc: dict[tuple[str, str], set[str]] = {}
        for ref, ent in entities.items():
            for type_name, values in ent.attrs.items():
                for v in values:
                    acc.setdefault((type_name, v), set()).add(ref)
        return {k: frozenset(v) for k, v in sorted(acc.items())}

    @property
    def refs(self) -> tuple[str, ...]:
        return tuple(self.entities)

    def entity(self, ref: str) -> PhysicalEntity:
        try:
            return self.entities[ref]
        except KeyError:
            raise UnknownReference(f"no entity with reference {ref!r}") from None

    def postings(self, type_name: str, value: str) -> frozenset[str]:
        if type_name not in self.schema.types:
            raise UnknownType(f"type not in schema: {type_name!r}")
        return self.inverted.get((type_name, value), frozenset())

    def verify_inverted(self) -> bool:
        """Transpose-consistency check: rebuild the index from entities and
        compare (used by tests and sanity tooling)."""
        return self.inverted == self._transpose(self.entities)


@dataclass(frozen=True)
class SearchQuery:
    """Conjunction of `all_terms` intersected with the disjunction of
    `any_terms`; a missing group is a no-op. At least one term required."""

    all_terms: tuple[tuple[str, str], ...] = ()
    any_terms: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "all_terms", tuple((t, v) for t, v in self.all_terms))
        object.__setattr__(self, "any_terms", tuple((t, v) for t, v in self.any_terms))

    @staticmethod
    def from_dict(d: Mapping) -> "SearchQuery":
        def terms(key):
            out = []
            for item in d.get(key, []):
                if not isinstance(item, Mapping) or "type" not in item or "value" not in item:
                    raise MalformedRecord(f"bad query term under {key!r}: {item!r}")
                out.append((str(item["type"]), str(item["value"])))
            return tuple(out)

        return SearchQuery(terms("all"), terms("any"))

    def to_dict(self) -> dict:
        return {
            "all": [{"type": t, "value": v} for t, v in self.all_terms],
            "any": [{"type": t, "value": v} for t, v in self.any_terms],
        }

    def validate(self, schema: SchemaHypergraph) -> None:
        if not self.all_terms and not self.any_terms:
            raise EmptyQuery("query has no terms")
        types = {t for t, _ in self.all_terms} | {t for t, _ in self.any_terms}
        unknown = sorted(types - set(schema.types))
        if unknown:
            raise UnknownType(f"query uses types not in schema: {unknown}")


def search(store: DatasetStore, query: SearchQuery) -> SearchResult:
    """Evaluate a query against the inverted index."""
    query.validate(store.schema)
    refs = set(store.refs)
    for t, v in query.all_terms:
        refs &= store.postings(t, v)
    if query.any_terms:
        acc: set[str] = set()
        for t, v in query.any_terms:
            acc |= store.postings(t, v)
        refs &= acc
    return SearchResult(frozenset(refs))


def ingest(
    records: Iterable,
    schema: SchemaHypergraph,
    strict: bool = False,
    ref_type: str | None = None,
    normalize: bool = False,
) -> tuple[DatasetStore, IngestReport]:
    """Build a store from a record stream.

    Records may be RecordDocument instances or raw JSONL objects. With
    `ref_type` set, each entity also carries its own reference as a value
    of that type (so the reference can serve as a navigation reference).
    Strict mode rejects attribute types missing from the schema; lenient
    mode adds them as isolated schema vertices and reports them.
    """
    report = IngestReport()
    known_types = set(schema.types)
    if ref_type is not None and ref_type not in known_types and strict:
        raise UnknownType(f"ref_type not in schema: {ref_type!r}")
    entities: dict[str, PhysicalEntity] = {}
    extra_types: dict[str, int] = {}

    for raw in records:
        doc = raw if isinstance(raw, RecordDocument) else record_from_dict(raw, normalize=normalize)
        report.records_read += 1
        attrs = {t: frozenset(vs) for t, vs in doc.attrs.items()}
        if ref_type is not None:
            attrs[ref_type] = attrs.get(ref_type, frozenset()) | {doc.ref}
        for t in attrs:
            if t not in known_types:
                if strict:
                    raise UnknownType(f"record {doc.ref!r} uses type not in schema: {t!r}")
                extra_types[t] = extra_types.get(t, 0) + 1
        ent = PhysicalEntity(doc.ref, attrs)
        if doc.ref in entities:
            if entities[doc.ref] == ent:
                report.duplicates_ignored += 1
                continue
            raise DuplicateRef(f"reference {doc.ref!r} ingested twice with differing attributes")
        entities[doc.ref] = ent

    final_schema = schema.with_extra_types(extra_types)
    store = DatasetStore(final_schema, entities, ref_type=ref_type)

    report.entities = len(store.entities)
    per_type: dict[str, set[str]] = {}
    for (t, v) in store.inverted:
        per_type.setdefault(t, set()).add(v)
    report.values_per_type = {t: len(vs) for t, vs in per_type.items()}
    report.unknown_type_occurrences = extra_types
    report.schema_types_without_instances = sorted(set(final_schema.types) - set(per_type))
    return store, report


def infer_schema(records: Iterable) -> SchemaHypergraph:
    """Derive a schema from a corpus with none declared: one vertex per
    observed type, one hyperedge per distinct per-record type set."""
    count = 0
    type_sets: set[tuple[str, ...]] = set()
    types: set[str] = set()
    for raw in records:
        doc = raw if isinstance(raw, RecordDocument) else record_from_dict(raw)
        count += 1
        present = tuple(sorted(t for t, vs in doc.attrs.items() if vs))
        types.update(present)
        if present:
            type_sets.add(present)
    if count == 0:
        raise MalformedRecord("cannot infer a schema from an empty record stream")
    edges = [Hyperedge(f"e{i}", members) for i, members in enumerate(sorted(type_sets), start=1)]
    return SchemaHypergraph(Hypergraph(tuple(types), tuple(edges)))


def merge_stores(*stores: DatasetStore) -> DatasetStore:
    """Union of multiple sources. Schemas merge by type-name union (edges
    deduplicated by member set and re-keyed canonically); entities merge by
    reference, identical records idempotently. If the merged extracted
    schema ends up disconnected, navigation simply proceeds per component."""
    if not stores:
        raise MalformedRecord("merge requires at least one store")
    types: set[str] = set()
    vlabels: dict[str, str] = {}
    elabel_by_members: dict[tuple[str, ...], str] = {}
    member_sets: set[tuple[str, ...]] = set()
    ref_types: set[str] = set()
    for s in stores:
        types.update(s.schema.types)
        vlabels.update(s.schema.vertex_labels)
        ref_types.update(s.schema.reference_types)
        for e in s.schema.carrier.edges:
            member_sets.add(e.members)
            label = s.schema.edge_labels.get(e.id, e.id)
            if label != e.id:
                elabel_by_members.setdefault(e.members, label)
    edges = [Hyperedge(f"m{i}", members) for i, members in enumerate(sorted(member_sets), start=1)]
    elabels = {
        e.id: elabel_by_members[e.members] for e in edges if e.members in elabel_by_members
    }
    schema = SchemaHypergraph(Hypergraph(tuple(types), tuple(edges)), vlabels, elabels, tuple(ref_types))

    entities: dict[str, PhysicalEntity] = {}
    for s in stores:
        for ref, ent in s.entities.items():
            if ref in entities:
                if entities[ref] != ent:
                    raise DuplicateRef(f"reference {ref!r} differs between merged sources")
                continue
            entities[ref] = ent
    ref_type_values = {s.ref_type for s in stores if s.ref_type is not None}
    merged_ref_type = ref_type_values.pop() if len(ref_type_values) == 1 else None
    return DatasetStore(schema, entities, ref_type=merged_ref_type)


def store_to_dict(store: DatasetStore) -> dict:
    entities = []
    for ref, ent in store.entities.items():
        entities.append(
            {"ref": ref, "attrs": {t: sorted(vs) for t, vs in sorted(ent.attrs.items())}}
        )
    return {
        "version": SNAPSHOT_VERSION,
        "ref_type": store.ref_type,
        "schema": schema_to_dict(store.schema),
        "entities": entities,
    }


def save_snapshot(store: DatasetStore, path) -> None:
    """Write the snapshot atomically; two saves of one store are
    byte-identical."""
    data = canonical_json_bytes(store_to_dict(store))
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(data)
    os.replace(tmp, path)


def load_snapshot(path) -> DatasetStore:
    """Load a snapshot; a corrupted file raises without a partial store."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise SnapshotError(f"cannot read snapshot {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SnapshotError(f"snapshot {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "version" not in doc:
        raise VersionMismatch(f"snapshot {path} carries no format version")
    if doc["version"] != SNAPSHOT_VERSION:
        raise VersionMismatch(
            f"snapshot {path} has version {doc['version']!r}, expected {SNAPSHOT_VERSION}"
        )
    try:
        schema = schema_from_dict(doc["schema"])
        entities = {
            e["ref"]: PhysicalEntity(e["ref"], {t: frozenset(vs) for t, vs in e["attrs"].items()})
            for e in doc["entities"]
        }
        ref_type = doc.get("ref_type")
    except (TypeError, KeyError, AttributeError) as exc:
        raise SnapshotError(f"snapshot {path} is structurally invalid: {exc}") from exc
    return DatasetStore(schema, entities, ref_type=ref_type)
