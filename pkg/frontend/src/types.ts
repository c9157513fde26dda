/** Wire types of the hyperfacet HTTP API (canonical JSON shapes). */

export interface FacetEdge {
    id: string;
    members: string[];
    empty: boolean;
    /** raw facets: the reference value that produced this edge */
    edge_source?: string;
    /** reduced facets: the merged reference values and their count */
    class?: string[];
    weight?: number;
}

export interface FacetPayload {
    vertices: string[];
    edges: FacetEdge[];
}

export interface SwitchResponse {
    facet: FacetPayload;
    s_a_count: number;
    reference_values: string[];
}

export interface SearchResponse {
    search_id: string;
    count: number;
}

export interface QueryTerm {
    type: string;
    value: string;
}

export interface SearchQuery {
    all?: QueryTerm[];
    any?: QueryTerm[];
}

export interface SchemaEdge {
    id: string;
    members: string[];
    label?: string;
}

export interface SchemaDoc {
    types: (string | { name: string; label: string })[];
    edges: SchemaEdge[];
    reference_types: string[];
}

export interface HypergraphDoc {
    vertices: string[];
    edges: { id: string; members: string[] }[];
}

export interface ExtractResponse {
    extracted: HypergraphDoc;
    reachability: HypergraphDoc;
}

export interface NavigationEdge {
    id: string;
    members: string[];
    removed_ref_set: string[];
}

export interface NavigationResponse {
    vertices: string[];
    edges: NavigationEdge[];
}

export interface ApiErrorBody {
    error: { code: string; message: string };
}

export function typeName(t: string | { name: string; label: string }): string {
    return typeof t === "string" ? t : t.name;
}
