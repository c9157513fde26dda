"""Exception hierarchy. Every error carries a stable machine-readable code
that the HTTP service and the CLI surface verbatim."""

from __future__ import annotations


class HyperfacetError(Exception):
    """Base class for domain errors."""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def payload(self) -> dict:
        return {"error": {"code": self.code, "message": self.message}}


class UnknownVertex(HyperfacetError):
    code = "unknown_vertex"


class UnknownEdge(HyperfacetError):
    code = "unknown_edge"


class UnknownType(HyperfacetError):
    code = "unknown_type"


class UnknownReference(HyperfacetError):
    code = "unknown_reference"


class UnknownSearch(HyperfacetError):
    code = "unknown_search"


class EmptySelection(HyperfacetError):
    code = "empty_selection"


class EmptyRefSet(HyperfacetError):
    code = "empty_ref_set"


class RefNotInComponent(HyperfacetError):
    code = "ref_not_in_component"


class EmptySearch(HyperfacetError):
    """Raised for empty search sets so callers can short-circuit to an
    empty facet instead of treating it as a hard failure."""

    code = "empty_search"


class EmptyQuery(HyperfacetError):
    code = "empty_query"


class DuplicateRef(HyperfacetError):
    code = "duplicate_ref"


class MalformedRecord(HyperfacetError):
    code = "malformed_record"


class InvalidSchema(HyperfacetError):
    code = "invalid_schema"


class SnapshotError(HyperfacetError):
    code = "io_error"


class VersionMismatch(HyperfacetError):
    code = "version_mismatch"
