/** Thin client for the hyperfacet service. Every non-2xx response with a
 * structured body becomes an ApiError carrying the machine-readable code. */

import type {
    ExtractResponse,
    FacetPayload,
    NavigationResponse,
    SchemaDoc,
    SearchQuery,
    SearchResponse,
    SwitchResponse,
} from "./types.js";

export class ApiError extends Error {
    constructor(
        readonly code: string,
        message: string,
        readonly status: number,
    ) {
        super(message);
    }
}

async function unwrap<T>(resp: Response): Promise<T> {
    if (resp.ok) {
        return (await resp.json()) as T;
    }
    let code = "http_error";
    let message = `${resp.status} ${resp.statusText}`;
    try {
        const body = await resp.json();
        if (body && body.error) {
            code = body.error.code;
            message = body.error.message;
        }
    } catch {
        // body was not JSON; keep the HTTP status text
    }
    throw new ApiError(code, message, resp.status);
}

export class HedronApi {
    constructor(readonly baseUrl: string) {}

    private async get<T>(path: string, params?: Record<string, string>): Promise<T> {
        const url = new URL(this.baseUrl + path);
        for (const [k, v] of Object.entries(params ?? {})) {
            url.searchParams.set(k, v);
        }
        return unwrap<T>(await fetch(url));
    }

    private async post<T>(path: string, body: unknown): Promise<T> {
        const resp = await fetch(this.baseUrl + path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        });
        return unwrap<T>(resp);
    }

    schema(): Promise<SchemaDoc> {
        return this.get("/api/schema");
    }

    extract(types: string[]): Promise<ExtractResponse> {
        return this.post("/api/extract", { types });
    }

    navigation(componentEdge: string[], refTypes: string[]): Promise<NavigationResponse> {
        return this.post("/api/navigation", {
            component_edge: componentEdge,
            ref_types: refTypes,
        });
    }

    search(query: SearchQuery): Promise<SearchResponse> {
        return this.post("/api/search", query);
    }

    facet(searchId: string, coocType: string, refType: string): Promise<FacetPayload> {
        return this.get("/api/facet", {
            search_id: searchId,
            type: coocType,
            ref: refType,
            reduced: "true",
        });
    }

    switch(
        searchId: string,
        refType: string,
        fromType: string,
        selection: string[],
        toType: string,
    ): Promise<SwitchResponse> {
        return this.post("/api/switch", {
            search_id: searchId,
            ref: refType,
            from_type: fromType,
            selection,
            to_type: toType,
            reduced: true,
        });
    }
}
