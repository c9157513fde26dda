/** Convex hulls for hyperedge overlays. */

export interface Point {
    x: number;
    y: number;
}

function cross(o: Point, a: Point, b: Point): number {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/** Andrew's monotone chain; returns the hull in counter-clockwise order.
 * Degenerate inputs (0-2 points, collinear sets) return what they can. */
export function convexHull(points: Point[]): Point[] {
    const pts = [...points].sort((a, b) => a.x - b.x || a.y - b.y);
    if (pts.length <= 2) return pts;
    const lower: Point[] = [];
    for (const p of pts) {
        while (lower.length >= 2 && cross(lower[lower.length - 2], lower[lower.length - 1], p) <= 0) {
            lower.pop();
        }
        lower.push(p);
    }
    const upper: Point[] = [];
    for (let i = pts.length - 1; i >= 0; i--) {
        const p = pts[i];
        while (upper.length >= 2 && cross(upper[upper.length - 2], upper[upper.length - 1], p) <= 0) {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    return lower.concat(upper);
}

export function centroid(points: Point[]): Point {
    if (points.length === 0) return { x: 0, y: 0 };
    let x = 0;
    let y = 0;
    for (const p of points) {
        x += p.x;
        y += p.y;
    }
    return { x: x / points.length, y: y / points.length };
}

/** Push hull corners outward from the centroid so the overlay clears the
 * vertex markers; single points and segments become visible blobs too. */
export function padHull(points: Point[], padding: number): Point[] {
    if (points.length === 0) return [];
    const c = centroid(points);
    if (points.length === 1) {
        const p = points[0];
        const out: Point[] = [];
        for (let i = 0; i < 8; i++) {
            const a = (i / 8) * 2 * Math.PI;
            out.push({ x: p.x + padding * Math.cos(a), y: p.y + padding * Math.sin(a) });
        }
        return out;
    }
    return points.map((p) => {
        const dx = p.x - c.x;
        const dy = p.y - c.y;
        const len = Math.hypot(dx, dy) || 1;
        return { x: p.x + (dx / len) * padding, y: p.y + (dy / len) * padding };
    });
}
