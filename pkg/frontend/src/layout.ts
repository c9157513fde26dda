/** Per-face 2D layout: a small force-directed relaxation seeded from the
 * payload itself, so identical payloads always land identically. */

import type { Point } from "./hull.js";
import type { FacetPayload } from "./types.js";
import { hashString, mulberry32 } from "./rand.js";

const ITERATIONS = 120;

export function layoutFacet(payload: FacetPayload, size: number): Map<string, Point> {
    const vertices = payload.vertices;
    const n = vertices.length;
    const positions = new Map<string, Point>();
    if (n === 0) return positions;

    const rng = mulberry32(hashString(JSON.stringify(payload)));
    const center = size / 2;
    const radius = size * 0.35;
    const pts: Point[] = vertices.map((_, i) => {
        const angle = (i / n) * 2 * Math.PI + rng() * 0.5;
        const r = radius * (0.7 + 0.3 * rng());
        return { x: center + r * Math.cos(angle), y: center + r * Math.sin(angle) };
    });

    const index = new Map(vertices.map((v, i) => [v, i]));
    const springs: [number, number][] = [];
    for (const edge of payload.edges) {
        // attract consecutive members; enough to pull co-members together
        for (let i = 1; i < edge.members.length; i++) {
            springs.push([index.get(edge.members[i - 1])!, index.get(edge.members[i])!]);
        }
    }

    const ideal = (size * 0.9) / Math.sqrt(n + 1);
    for (let it = 0; it < ITERATIONS; it++) {
        const cool = 1 - it / ITERATIONS;
        const disp: Point[] = pts.map(() => ({ x: 0, y: 0 }));
        for (let i = 0; i < n; i++) {
            for (let j = i + 1; j < n; j++) {
                let dx = pts[i].x - pts[j].x;
                let dy = pts[i].y - pts[j].y;
                let d = Math.hypot(dx, dy);
                if (d < 1e-6) {
                    dx = 0.01 * (i - j);
                    dy = 0.01;
                    d = Math.hypot(dx, dy);
                }
                const force = (ideal * ideal) / d / d;
                disp[i].x += dx * force;
                disp[i].y += dy * force;
                disp[j].x -= dx * force;
                disp[j].y -= dy * force;
            }
        }
        for (const [a, b] of springs) {
            const dx = pts[b].x - pts[a].x;
            const dy = pts[b].y - pts[a].y;
            const d = Math.hypot(dx, dy) || 1;
            const force = (d - ideal) / d / 6;
            disp[a].x += dx * force;
            disp[a].y += dy * force;
            disp[b].x -= dx * force;
            disp[b].y -= dy * force;
        }
        const step = 6 * cool;
        for (let i = 0; i < n; i++) {
            const d = Math.hypot(disp[i].x, disp[i].y) || 1;
            pts[i].x += (disp[i].x / d) * Math.min(d, step);
            pts[i].y += (disp[i].y / d) * Math.min(d, step);
            pts[i].x = Math.min(size * 0.92, Math.max(size * 0.08, pts[i].x));
            pts[i].y = Math.min(size * 0.92, Math.max(size * 0.08, pts[i].y));
        }
    }

    vertices.forEach((v, i) => {
        positions.set(v, { x: round2(pts[i].x), y: round2(pts[i].y) });
    });
    return positions;
}

function round2(x: number): number {
    return Math.round(x * 100) / 100;
}
