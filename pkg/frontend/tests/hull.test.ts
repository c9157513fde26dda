import { describe, expect, test } from "vitest";

import { centroid, convexHull, padHull, type Point } from "../dist/hull.js";

function contains(hull: Point[], p: Point): boolean {
    // point-in-convex-polygon via consistent cross-product sign
    for (let i = 0; i < hull.length; i++) {
        const a = hull[i];
        const b = hull[(i + 1) % hull.length];
        const cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (cr < -1e-9) return false;
    }
    return true;
}

describe("convexHull", () => {
    test("square with interior point", () => {
        const pts = [
            { x: 0, y: 0 },
            { x: 4, y: 0 },
            { x: 4, y: 4 },
            { x: 0, y: 4 },
            { x: 2, y: 2 },
        ];
        const hull = convexHull(pts);
        expect(hull).toHaveLength(4);
        expect(hull).not.toContainEqual({ x: 2, y: 2 });
    });

    test("hull contains every input point", () => {
        const pts: Point[] = [];
        let seed = 7;
        const rand = () => (seed = (seed * 1103515245 + 12345) % 2 ** 31) / 2 ** 31;
        for (let i = 0; i < 40; i++) pts.push({ x: rand() * 100, y: rand() * 100 });
        const hull = convexHull(pts);
        for (const p of pts) expect(contains(hull, p)).toBe(true);
    });

    test("degenerate inputs", () => {
        expect(convexHull([])).toEqual([]);
        expect(convexHull([{ x: 1, y: 2 }])).toEqual([{ x: 1, y: 2 }]);
        expect(convexHull([{ x: 1, y: 2 }, { x: 3, y: 4 }])).toHaveLength(2);
    });

    test("collinear points collapse to a segment", () => {
        const pts = [0, 1, 2, 3].map((i) => ({ x: i, y: i }));
        expect(convexHull(pts)).toHaveLength(2);
    });
});

describe("padHull", () => {
    test("moves corners away from the centroid", () => {
        const hull = [
            { x: 0, y: 0 },
            { x: 4, y: 0 },
            { x: 2, y: 4 },
        ];
        const c = centroid(hull);
        for (const [i, p] of padHull(hull, 5).entries()) {
            const before = Math.hypot(hull[i].x - c.x, hull[i].y - c.y);
            const after = Math.hypot(p.x - c.x, p.y - c.y);
            expect(after).toBeGreaterThan(before);
        }
    });

    test("single point becomes a ring", () => {
        expect(padHull([{ x: 5, y: 5 }], 3)).toHaveLength(8);
    });
});
