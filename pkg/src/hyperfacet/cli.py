"""Operator CLI: ingest corpora, inspect the schema stack, run searches and
facets in batch, export hypergraphs, launch the service.

Exit codes: 0 success, 2 validation error, 1 I/O error. Errors print as a
single JSON line on stderr. JSON written to stdout or files is canonical
(sorted keys, compact, no trailing newline) so CLI output matches API
output byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import HyperfacetError, MalformedRecord, SnapshotError, VersionMismatch
from .export import facet_to_graphml
from .facets import facet_for_search, switch_for_search
from .hypergraph import canonical_json_bytes, to_canonical_dict
from .schema import (
    FacetPair,
    build_navigation,
    build_reachability,
    extract_schema,
    navigation_payload,
    schema_from_dict,
    schema_to_dict,
)
from .store import (
    SearchQuery,
    infer_schema,
    ingest,
    load_snapshot,
    read_csv_records,
    read_jsonl,
    save_snapshot,
    search,
)


def _emit(data: bytes, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _emit_json(payload, out_path: str | None) -> None:
    _emit(canonical_json_bytes(payload), out_path)


def _load_json(path: str, what: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(f"{what} file {path} is not valid JSON: {exc}") from exc


def _load_query(path: str) -> SearchQuery:
    return SearchQuery.from_dict(_load_json(path, "query"))


def _split_list(values: list[str]) -> list[str]:
    out = []
    for chunk in values:
        out.extend(v for v in chunk.split(",") if v)
    return out


def cmd_ingest(args) -> int:
    records = read_csv_records(args.input) if args.csv else read_jsonl(args.input)
    if args.schema:
        schema = schema_from_dict(_load_json(args.schema, "schema"))
    else:
        records = list(records)
        schema = infer_schema(records)
    store, report = ingest(
        records,
        schema,
        strict=args.strict,
        ref_type=args.ref_type,
        normalize=args.normalize,
    )
    save_snapshot(store, args.out)
    _emit_json(report.to_dict(), None)
    return 0


def cmd_schema(args) -> int:
    store = load_snapshot(args.store)
    if args.extract:
        extracted = extract_schema(store.schema, _split_list(args.extract))
        reach = build_reachability(extracted)
        _emit_json(
            {
                "extracted": to_canonical_dict(extracted.carrier),
                "reachability": to_canonical_dict(reach.carrier),
            },
            args.out,
        )
    else:
        _emit_json(schema_to_dict(store.schema), args.out)
    return 0


def cmd_navigate(args) -> int:
    load_snapshot(args.store)  # fail early on a bad store path
    nav = build_navigation(_split_list(args.component), _split_list(args.refs))
    _emit_json(navigation_payload(nav), args.out)
    return 0


def cmd_facet(args) -> int:
    store = load_snapshot(args.store)
    refs = search(store, _load_query(args.query))
    payload = facet_for_search(
        store,
        refs,
        FacetPair(args.type, args.ref),
        reduced=args.reduced,
        drop_empty=args.drop_empty,
        top_k_edges=args.top_k_edges,
    )
    if args.out and args.out.endswith(".graphml"):
        _emit(facet_to_graphml(payload), args.out)
    else:
        _emit_json(payload, args.out)
    return 0


def cmd_switch(args) -> int:
    store = load_snapshot(args.store)
    refs = search(store, _load_query(args.query))
    payload = switch_for_search(
        store,
        refs,
        ref_type=args.ref,
        from_type=getattr(args, "from"),
        selection=_split_list(args.select),
        to_type=args.to,
        reduced=args.reduced,
        drop_empty=args.drop_empty,
    )
    _emit_json(payload, args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    store = load_snapshot(args.store)
    app = create_app(store, cache_size=args.cache_size, cors_origin=args.cors_origin)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfacet",
        description="Faceted co-occurrence navigation over hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="build a store snapshot from a record corpus")
    p.add_argument("--schema", help="schema JSON file (inferred from the corpus when omitted)")
    p.add_argument("--input", required=True, help="JSONL corpus (or CSV with --csv)")
    p.add_argument("--csv", action="store_true", help="read the input as CSV (columns = types)")
    p.add_argument("--strict", action="store_true", help="reject record types missing from the schema")
    p.add_argument("--normalize", action="store_true", help="lowercase and trim values")
    p.add_argument("--ref-type", help="also store each reference as a value of this type")
    p.add_argument("--out", required=True, help="snapshot path to write")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("schema", help="print the schema, or an extraction with its reachability")
    p.add_argument("--store", required=True)
    p.add_argument("--extract", action="append", metavar="TYPES", help="comma-separated type names")
    p.add_argument("--out")
    p.set_defaults(func=cmd_schema)

    p = sub.add_parser("navigate", help="enumerate navigation edges with their removed sets")
    p.add_argument("--store", required=True)
    p.add_argument("--component", action="append", required=True, metavar="TYPES")
    p.add_argument("--refs", action="append", required=True, metavar="TYPES")
    p.add_argument("--out")
    p.set_defaults(func=cmd_navigate)

    p = sub.add_parser("facet", help="build a facet hypergraph for a query")
    p.add_argument("--store", required=True)
    p.add_argument("--query", required=True, help="query JSON file ({'all':[...],'any':[...]})")
    p.add_argument("--type", required=True, help="co-occurrence type")
    p.add_argument("--ref", required=True, help="reference type")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--drop-empty", action="store_true")
    p.add_argument("--top-k-edges", type=int)
    p.add_argument("--out", help="output file; .graphml selects bipartite GraphML")
    p.set_defaults(func=cmd_facet)

    p = sub.add_parser("switch", help="pivot a selection to another facet of the same search")
    p.add_argument("--store", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--from", required=True, dest="from", help="current co-occurrence type")
    p.add_argument("--select", action="append", required=True, metavar="VERTICES")
    p.add_argument("--to", required=True, help="target co-occurrence type")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--drop-empty", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("serve", help="serve the HTTP API over a snapshot")
    p.add_argument("--store", required=True)
    p.add_argument("--port", type=int, default=int(os.environ.get("HYPERFACET_PORT", "8712")))
    p.add_argument("--host", default=os.environ.get("HYPERFACET_HOST", "127.0.0.1"))
    p.add_argument(
        "--cache-size", type=int, default=int(os.environ.get("HYPERFACET_CACHE_SIZE", "1024"))
    )
    p.add_argument("--cors-origin", default=os.environ.get("HYPERFACET_CORS_ORIGIN"))
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SnapshotError, VersionMismatch) as exc:
        print(json.dumps(exc.payload(), sort_keys=True), file=sys.stderr)
        return 1
    except HyperfacetError as exc:
        print(json.dumps(exc.payload(), sort_keys=True), file=sys.stderr)
        return 2
    except OSError as exc:
        print(
            json.dumps({"error": {"code": "io_error", "message": str(exc)}}, sort_keys=True),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
