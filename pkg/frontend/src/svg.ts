/** Scene to SVG markup. Pure string building; the DOM layer injects the
 * result and wires events through data attributes. */

import type { Point } from "./hull.js";
import type { FaceScene } from "./scene.js";

function esc(s: string): string {
    return s
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

function pathOf(points: Point[]): string {
    if (points.length === 0) return "";
    const [head, ...rest] = points;
    return `M ${head.x} ${head.y} ` + rest.map((p) => `L ${p.x} ${p.y}`).join(" ") + " Z";
}

const HUES = [210, 30, 120, 275, 0, 160, 55, 330];

export function sceneToSvg(scene: FaceScene): string {
    const parts: string[] = [];
    const maxWeight = Math.max(1, ...scene.hyperedges.map((e) => e.weight));
    parts.push(
        `<svg class="face-svg" viewBox="0 0 ${scene.size} ${scene.size}" xmlns="http://www.w3.org/2000/svg">`,
    );

    scene.hyperedges.forEach((edge, i) => {
        const hue = HUES[i % HUES.length];
        const opacity = 0.16 + 0.5 * (edge.weight / maxWeight);
        if (edge.empty) {
            parts.push(
                `<g class="hyperedge empty" data-edge-id="${esc(edge.id)}">` +
                    `<circle cx="${edge.node.x}" cy="${edge.node.y}" r="10" fill="none" ` +
                    `stroke="hsl(${hue} 45% 45%)" stroke-dasharray="3 3"/>` +
                    badgeSvg(edge.badge, edge.weight, hue) +
                    `</g>`,
            );
            return;
        }
        if (scene.mode === "hull") {
            parts.push(
                `<g class="hyperedge" data-edge-id="${esc(edge.id)}">` +
                    `<path d="${pathOf(edge.hull)}" fill="hsl(${hue} 70% 55% / ${opacity.toFixed(3)})" ` +
                    `stroke="hsl(${hue} 55% 40%)" stroke-width="1"/>` +
                    badgeSvg(edge.badge, edge.weight, hue) +
                    `</g>`,
            );
        } else {
            const spokes = edge.members
                .map((m) => {
                    const v = scene.vertices.find((s) => s.id === m)!;
                    return `<line x1="${edge.node.x}" y1="${edge.node.y}" x2="${v.x}" y2="${v.y}" ` +
                        `stroke="hsl(${hue} 55% 45%)" stroke-width="1"/>`;
                })
                .join("");
            parts.push(
                `<g class="hyperedge" data-edge-id="${esc(edge.id)}">` +
                    spokes +
                    `<rect x="${edge.node.x - 7}" y="${edge.node.y - 7}" width="14" height="14" rx="3" ` +
                    `fill="hsl(${hue} 70% 50%)"/>` +
                    badgeSvg(edge.badge, edge.weight, hue) +
                    `</g>`,
            );
        }
    });

    for (const v of scene.vertices) {
        parts.push(
            `<g class="vertex${v.selected ? " selected" : ""}" data-vertex-id="${esc(v.id)}">` +
                `<circle cx="${v.x}" cy="${v.y}" r="${v.selected ? 8 : 6}"/>` +
                `<text x="${v.x}" y="${v.y - 10}" text-anchor="middle">${esc(v.id)}</text>` +
                `</g>`,
        );
    }
    parts.push("</svg>");
    return parts.join("");
}

function badgeSvg(at: Point, weight: number, hue: number): string {
    return (
        `<g class="weight-badge">` +
        `<circle cx="${at.x}" cy="${at.y}" r="9" fill="hsl(${hue} 60% 35%)"/>` +
        `<text x="${at.x}" y="${at.y + 3.5}" text-anchor="middle">${weight}</text>` +
        `</g>`
    );
}
