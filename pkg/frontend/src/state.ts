/** DataHedron state and its pure transitions.
 *
 * Everything the view shows is a function of (face payloads, selections,
 * breadcrumb, render mode); applySwitch/breadcrumbBack never mutate their
 * inputs, so replaying recorded responses reproduces the exact state. */

import type { FacetPayload, SwitchResponse } from "./types.js";

export type RenderMode = "hull" | "bipartite";

export interface FaceModel {
    faceId: string;
    coocType: string;
    refType: string;
    payload: FacetPayload;
    selection: string[];
}

export interface ReferenceFace {
    /** reference values behind the last switch (V_{rho,A}) */
    values: string[];
    /** size of the physical reference set behind them (|S_A|) */
    refCount: number;
    fromFace: string | null;
    toFace: string | null;
}

export interface FaceSnapshot {
    faces: FaceModel[];
    referenceFace: ReferenceFace;
    activeFace: string;
}

export interface HedronState {
    searchId: string;
    refType: string;
    faces: FaceModel[];
    referenceFace: ReferenceFace;
    breadcrumb: FaceSnapshot[];
    activeFace: string;
    renderMode: RenderMode;
}

const EMPTY_REFERENCE: ReferenceFace = {
    values: [],
    refCount: 0,
    fromFace: null,
    toFace: null,
};

function cloneFace(face: FaceModel): FaceModel {
    return { ...face, selection: [...face.selection] };
}

function snapshot(state: HedronState): FaceSnapshot {
    return {
        faces: state.faces.map(cloneFace),
        referenceFace: { ...state.referenceFace, values: [...state.referenceFace.values] },
        activeFace: state.activeFace,
    };
}

/** One face per co-occurrence type of the navigation edge, all sharing the
 * reference type; payloads are the reduced facet exports. */
export function initHedron(
    searchId: string,
    refType: string,
    facePayloads: { coocType: string; payload: FacetPayload }[],
): HedronState {
    const faces = facePayloads.map(({ coocType, payload }) => ({
        faceId: coocType,
        coocType,
        refType,
        payload,
        selection: [] as string[],
    }));
    return {
        searchId,
        refType,
        faces,
        referenceFace: EMPTY_REFERENCE,
        breadcrumb: [],
        activeFace: faces.length ? faces[0].faceId : "",
        renderMode: "hull",
    };
}

export function getFace(state: HedronState, faceId: string): FaceModel {
    const face = state.faces.find((f) => f.faceId === faceId);
    if (!face) throw new Error(`no face ${faceId}`);
    return face;
}

export function toggleSelection(state: HedronState, faceId: string, vertexId: string): HedronState {
    const faces = state.faces.map((face) => {
        if (face.faceId !== faceId) return face;
        if (!face.payload.vertices.includes(vertexId)) {
            throw new Error(`vertex ${vertexId} not on face ${faceId}`);
        }
        const selected = face.selection.includes(vertexId)
            ? face.selection.filter((v) => v !== vertexId)
            : [...face.selection, vertexId].sort();
        return { ...face, selection: selected };
    });
    return { ...state, faces };
}

export function setActiveFace(state: HedronState, faceId: string): HedronState {
    getFace(state, faceId);
    return { ...state, activeFace: faceId };
}

export function setRenderMode(state: HedronState, renderMode: RenderMode): HedronState {
    return { ...state, renderMode };
}

/** Apply a switch response: the prior view is pushed on the breadcrumb,
 * the target face takes the restricted facet, and the reference face shows
 * the linking values and reference count. */
export function applySwitch(
    state: HedronState,
    fromFaceId: string,
    toFaceId: string,
    response: SwitchResponse,
): HedronState {
    getFace(state, fromFaceId);
    getFace(state, toFaceId);
    const breadcrumb = [...state.breadcrumb, snapshot(state)];
    const faces = state.faces.map((face) =>
        face.faceId === toFaceId
            ? { ...face, payload: response.facet, selection: [] as string[] }
            : cloneFace(face),
    );
    return {
        ...state,
        faces,
        breadcrumb,
        referenceFace: {
            values: [...response.reference_values],
            refCount: response.s_a_count,
            fromFace: fromFaceId,
            toFace: toFaceId,
        },
        activeFace: toFaceId,
    };
}

/** Pop the breadcrumb, restoring the previous faces exactly. */
export function breadcrumbBack(state: HedronState): HedronState {
    if (state.breadcrumb.length === 0) return state;
    const previous = state.breadcrumb[state.breadcrumb.length - 1];
    return {
        ...state,
        faces: previous.faces.map(cloneFace),
        referenceFace: { ...previous.referenceFace, values: [...previous.referenceFace.values] },
        activeFace: previous.activeFace,
        breadcrumb: state.breadcrumb.slice(0, -1),
    };
}

/** Replay a sequence of recorded transitions on a fresh hedron; used to
 * check that the view is a pure function of its inputs. */
export type Transition =
    | { kind: "select"; faceId: string; vertexId: string }
    | { kind: "switch"; fromFaceId: string; toFaceId: string; response: SwitchResponse }
    | { kind: "back" }
    | { kind: "mode"; renderMode: RenderMode }
    | { kind: "activate"; faceId: string };

export function replay(initial: HedronState, transitions: Transition[]): HedronState {
    let state = initial;
    for (const t of transitions) {
        switch (t.kind) {
            case "select":
                state = toggleSelection(state, t.faceId, t.vertexId);
                break;
            case "switch":
                state = applySwitch(state, t.fromFaceId, t.toFaceId, t.response);
                break;
            case "back":
                state = breadcrumbBack(state);
                break;
            case "mode":
                state = setRenderMode(state, t.renderMode);
                break;
            case "activate":
                state = setActiveFace(state, t.faceId);
                break;
        }
    }
    return state;
}
