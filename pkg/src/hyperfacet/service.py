"""HTTP API over a sealed store: schema stack, search, facets, switching.

Responses are canonical JSON bytes (sorted keys, compact separators), so a
repeated identical request returns a byte-identical body. The only mutable
state is the bounded search-session cache.
"""

from __future__ import annotations

import hashlib
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError

from .errors import HyperfacetError, MalformedRecord, UnknownSearch
from .facets import facet_for_search, switch_for_search
from .hypergraph import canonical_json_bytes, to_canonical_dict
from .schema import (
    FacetPair,
    build_navigation,
    build_reachability,
    extract_schema,
    navigation_payload,
    schema_to_dict,
)
from .store import DatasetStore, SearchQuery, SearchResult, search

DEFAULT_CACHE_SIZE = 1024


@dataclass
class SessionSearch:
    id: str
    query: SearchQuery
    refs: SearchResult
    created: float


class SessionCache:
    """Bounded LRU of search sessions; safe under concurrent access."""

    def __init__(self, capacity: int = DEFAULT_CACHE_SIZE):
        self.capacity = max(1, capacity)
        self._lock = threading.Lock()
        self._items: OrderedDict[str, SessionSearch] = OrderedDict()

    def put(self, session: SessionSearch) -> None:
        with self._lock:
            self._items[session.id] = session
            self._items.move_to_end(session.id)
            while len(self._items) > self.capacity:
                self._items.popitem(last=False)

    def get(self, search_id: str) -> SessionSearch:
        with self._lock:
            session = self._items.get(search_id)
            if session is None:
                raise UnknownSearch(f"no cached search with id {search_id!r}")
            self._items.move_to_end(search_id)
            return session


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _search_token(query: SearchQuery) -> str:
    # deterministic: replaying the same query yields the same id
    return hashlib.sha256(canonical_json_bytes(query.to_dict())).hexdigest()[:32]


def _as_bool(value: str | bool) -> bool:
    if isinstance(value, bool):
        return value
    return value.lower() in ("1", "true", "yes", "on")


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception as exc:
        raise MalformedRecord(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise MalformedRecord("request body must be a JSON object")
    return body


def create_app(
    store: DatasetStore,
    cache_size: int = DEFAULT_CACHE_SIZE,
    cors_origin: str | None = None,
) -> FastAPI:
    app = FastAPI(title="hyperfacet", docs_url=None, redoc_url=None)
    sessions = SessionCache(cache_size)

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def on_request_validation(_request: Request, exc: RequestValidationError):
        return _json_response(
            {"error": {"code": "invalid_request", "message": str(exc.errors())}},
            status_code=400,
        )

    @app.exception_handler(HyperfacetError)
    async def on_domain_error(_request: Request, exc: HyperfacetError):
        status = 404 if isinstance(exc, UnknownSearch) else 400
        return _json_response(exc.payload(), status_code=status)

    @app.get("/api/schema")
    def get_schema():
        return _json_response(schema_to_dict(store.schema))

    @app.post("/api/extract")
    async def post_extract(request: Request):
        body = await _json_body(request)
        extracted = extract_schema(store.schema, body.get("types", []))
        reach = build_reachability(extracted)
        return _json_response(
            {
                "extracted": to_canonical_dict(extracted.carrier),
                "reachability": to_canonical_dict(reach.carrier),
            }
        )

    @app.post("/api/navigation")
    async def post_navigation(request: Request):
        body = await _json_body(request)
        nav = build_navigation(body.get("component_edge", []), body.get("ref_types", []))
        return _json_response(navigation_payload(nav))

    @app.post("/api/search")
    async def post_search(request: Request):
        body = await _json_body(request)
        query = SearchQuery.from_dict(body)
        refs = search(store, query)
        token = _search_token(query)
        sessions.put(SessionSearch(token, query, refs, time.time()))
        return _json_response({"search_id": token, "count": len(refs)})

    @app.get("/api/facet")
    def get_facet(
        search_id: str,
        type: str = Query(...),
        ref: str = Query(...),
        reduced: str = "false",
        drop_empty: str = "false",
        top_k_edges: int | None = None,
    ):
        session = sessions.get(search_id)
        payload = facet_for_search(
            store,
            session.refs,
            FacetPair(type, ref),
            reduced=_as_bool(reduced),
            drop_empty=_as_bool(drop_empty),
            top_k_edges=top_k_edges,
        )
        return _json_response(payload)

    @app.post("/api/switch")
    async def post_switch(request: Request):
        body = await _json_body(request)
        session = sessions.get(str(body.get("search_id", "")))
        payload = switch_for_search(
            store,
            session.refs,
            ref_type=body.get("ref", ""),
            from_type=body.get("from_type", ""),
            selection=body.get("selection", []),
            to_type=body.get("to_type", ""),
            reduced=_as_bool(body.get("reduced", False)),
            drop_empty=_as_bool(body.get("drop_empty", False)),
            top_k_edges=body.get("top_k_edges"),
        )
        return _json_response(payload)

    return app
