/** Face scenes: the geometry a face renders, as pure serializable data.
 * The SVG layer only transcribes a scene, so "what is rendered" can be
 * asserted (and byte-compared) without a DOM. Hyperedge count and weights
 * come straight from the payload; no client-side aggregation. */

import { centroid, convexHull, padHull, type Point } from "./hull.js";
import { layoutFacet } from "./layout.js";
import type { FaceModel, RenderMode } from "./state.js";

export interface SceneVertex {
    id: string;
    x: number;
    y: number;
    selected: boolean;
}

export interface SceneHyperedge {
    id: string;
    weight: number;
    empty: boolean;
    classValues: string[];
    members: string[];
    /** hull mode: padded convex hull around the members */
    hull: Point[];
    /** bipartite mode: edge-node position; lines go to each member */
    node: Point;
    badge: Point;
}

export interface FaceScene {
    faceId: string;
    coocType: string;
    refType: string;
    mode: RenderMode;
    size: number;
    vertices: SceneVertex[];
    hyperedges: SceneHyperedge[];
}

export const FACE_SIZE = 340;

export function buildFaceScene(face: FaceModel, mode: RenderMode, size: number = FACE_SIZE): FaceScene {
    const positions = layoutFacet(face.payload, size);
    const selected = new Set(face.selection);
    const vertices: SceneVertex[] = face.payload.vertices.map((id) => {
        const p = positions.get(id)!;
        return { id, x: p.x, y: p.y, selected: selected.has(id) };
    });

    let emptySlot = 0;
    const hyperedges: SceneHyperedge[] = face.payload.edges.map((edge) => {
        const memberPoints = edge.members.map((m) => positions.get(m)!);
        let hull: Point[] = [];
        let node: Point;
        let badge: Point;
        if (memberPoints.length === 0) {
            // empty hyperedges have nothing to wrap; park their badge in a
            // deterministic slot along the bottom edge
            emptySlot += 1;
            node = { x: 24 + emptySlot * 30, y: size - 16 };
            badge = node;
        } else {
            hull = padHull(convexHull(memberPoints), 14);
            node = centroid(memberPoints);
            badge = mode === "hull" ? (hull[0] ?? node) : node;
        }
        return {
            id: edge.id,
            weight: edge.weight ?? 1,
            empty: edge.empty,
            classValues: edge.class ?? (edge.edge_source !== undefined ? [edge.edge_source] : []),
            members: [...edge.members],
            hull,
            node,
            badge,
        };
    });

    return {
        faceId: face.faceId,
        coocType: face.coocType,
        refType: face.refType,
        mode,
        size,
        vertices,
        hyperedges,
    };
}

/** Canonical serialization of a scene, for byte-level comparisons. */
export function sceneBytes(scene: FaceScene): string {
    return JSON.stringify(scene);
}
