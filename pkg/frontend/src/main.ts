/** Browser bootstrap: wires the API, the pure state, and the carousel of
 * faces into the DOM. The polyhedron is a CSS 3D ring of faces; pivoting
 * rotates the ring so the target face comes forward. */

import { ApiError, HedronApi } from "./api.js";
import { buildFaceScene, FACE_SIZE } from "./scene.js";
import {
    applySwitch,
    breadcrumbBack,
    getFace,
    initHedron,
    setActiveFace,
    setRenderMode,
    toggleSelection,
    type HedronState,
} from "./state.js";
import { sceneToSvg } from "./svg.js";
import { typeName, type SearchQuery } from "./types.js";

interface App {
    api: HedronApi;
    state: HedronState | null;
    faceTypes: string[];
    faceErrors: Map<string, string>;
}

const app: App = { api: new HedronApi(""), state: null, faceTypes: [], faceErrors: new Map() };

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node as T;
}

function toast(message: string): void {
    const box = el<HTMLDivElement>("toast");
    box.textContent = message;
    box.classList.add("visible");
    setTimeout(() => box.classList.remove("visible"), 4000);
}

async function connect(): Promise<void> {
    app.api = new HedronApi(el<HTMLInputElement>("service-url").value.replace(/\/$/, ""));
    const schema = await app.api.schema();
    const names = schema.types.map(typeName);
    el<HTMLInputElement>("extract-types").value = names.filter((n) => n !== "title").join(",");
    const refSelect = el<HTMLSelectElement>("ref-type");
    refSelect.innerHTML = "";
    const refCandidates = schema.reference_types.length ? schema.reference_types : names;
    for (const name of refCandidates) {
        const opt = document.createElement("option");
        opt.value = name;
        opt.textContent = name;
        refSelect.appendChild(opt);
    }
    el<HTMLButtonElement>("load-hedron").disabled = false;
    toast(`connected: ${names.length} types`);
}

async function loadHedron(): Promise<void> {
    const refType = el<HTMLSelectElement>("ref-type").value;
    const extractTypes = el<HTMLInputElement>("extract-types")
        .value.split(",")
        .map((s) => s.trim())
        .filter(Boolean);
    const query = JSON.parse(el<HTMLTextAreaElement>("query-json").value) as SearchQuery;

    const extracted = await app.api.extract(extractTypes);
    const component = extracted.reachability.edges.find((e) => e.members.includes(refType));
    if (!component) {
        throw new Error(`reference type ${refType} is in no reachability component`);
    }
    const nav = await app.api.navigation(component.members, [refType]);
    const edge = nav.edges[0];
    const searchResp = await app.api.search(query);

    app.faceTypes = edge.members;
    app.faceErrors = new Map();
    const payloads = [];
    for (const coocType of edge.members) {
        try {
            payloads.push({ coocType, payload: await app.api.facet(searchResp.search_id, coocType, refType) });
        } catch (err) {
            // face-level error badge; the face renders empty but marked
            app.faceErrors.set(coocType, err instanceof ApiError ? err.code : String(err));
            payloads.push({ coocType, payload: { vertices: [], edges: [] } });
        }
    }
    app.state = initHedron(searchResp.search_id, refType, payloads);
    el<HTMLSpanElement>("search-info").textContent =
        `search ${searchResp.search_id.slice(0, 8)}… (${searchResp.count} refs), reference: ${refType}`;
    render();
}

async function pivot(fromFaceId: string, toFaceId: string): Promise<void> {
    if (!app.state) return;
    const face = getFace(app.state, fromFaceId);
    if (face.selection.length === 0) return;
    try {
        const response = await app.api.switch(
            app.state.searchId,
            app.state.refType,
            face.coocType,
            face.selection,
            getFace(app.state, toFaceId).coocType,
        );
        app.state = applySwitch(app.state, fromFaceId, toFaceId, response);
        render();
    } catch (err) {
        toast(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
    }
}

function render(): void {
    const state = app.state;
    if (!state) return;
    const stage = el<HTMLDivElement>("hedron");
    stage.innerHTML = "";
    const faceCount = state.faces.length + 1; // + reference face
    const radius = Math.round(FACE_SIZE / 2 / Math.tan(Math.PI / Math.max(faceCount, 3)) + 40);
    const activeIndex = state.faces.findIndex((f) => f.faceId === state.activeFace);

    const ring = document.createElement("div");
    ring.className = "ring";
    ring.style.transform = `translateZ(${-radius}px) rotateY(${(-360 / faceCount) * activeIndex}deg)`;

    state.faces.forEach((face, i) => {
        const scene = buildFaceScene(face, state.renderMode);
        const panel = document.createElement("section");
        panel.className = "face" + (face.faceId === state.activeFace ? " active" : "");
        panel.style.transform = `rotateY(${(360 / faceCount) * i}deg) translateZ(${radius}px)`;
        const error = app.faceErrors.get(face.coocType);
        panel.innerHTML =
            `<header><h2>${face.coocType} / ${face.refType}</h2>` +
            (error ? `<span class="error-badge">${error}</span>` : "") +
            `</header>` +
            sceneToSvg(scene) +
            footerHtml(state, face.faceId, face.selection.length);
        panel.addEventListener("click", (ev) => onFaceClick(ev, face.faceId));
        ring.appendChild(panel);
    });

    ring.appendChild(referenceFaceNode(state, faceCount, radius));
    stage.appendChild(ring);
    el<HTMLButtonElement>("back-button").disabled = state.breadcrumb.length === 0;
    el<HTMLSpanElement>("breadcrumb-depth").textContent = String(state.breadcrumb.length);
}

function footerHtml(state: HedronState, faceId: string, selected: number): string {
    const targets = state.faces
        .filter((f) => f.faceId !== faceId)
        .map((f) => `<option value="${f.faceId}">${f.coocType}</option>`)
        .join("");
    return (
        `<footer>` +
        `<span class="sel-count">${selected} selected</span>` +
        `<select class="pivot-target" data-face-id="${faceId}">${targets}</select>` +
        `<button class="pivot-button" data-face-id="${faceId}" ${selected ? "" : "disabled"}>pivot</button>` +
        `</footer>`
    );
}

function referenceFaceNode(state: HedronState, faceCount: number, radius: number): HTMLElement {
    const panel = document.createElement("section");
    panel.className = "face reference";
    panel.style.transform = `rotateY(${(360 / faceCount) * state.faces.length}deg) translateZ(${radius}px)`;
    const ref = state.referenceFace;
    const values = ref.values.length
        ? ref.values.map((v) => `<li>${v}</li>`).join("")
        : "<li class='dim'>no switch yet</li>";
    panel.innerHTML =
        `<header><h2>references (${state.refType})</h2></header>` +
        `<p>${ref.fromFace ?? "-"} → ${ref.toFace ?? "-"} · |S_A| = ${ref.refCount}</p>` +
        `<ul class="ref-values">${values}</ul>`;
    return panel;
}

function onFaceClick(ev: Event, faceId: string): void {
    if (!app.state) return;
    const target = ev.target as HTMLElement;
    const vertexNode = target.closest("[data-vertex-id]");
    if (vertexNode) {
        app.state = setActiveFace(app.state, faceId);
        app.state = toggleSelection(app.state, faceId, vertexNode.getAttribute("data-vertex-id")!);
        render();
        return;
    }
    if (target.classList.contains("pivot-button")) {
        const select = (target.parentElement as HTMLElement).querySelector(
            ".pivot-target",
        ) as HTMLSelectElement;
        void pivot(faceId, select.value);
        return;
    }
    if (app.state.activeFace !== faceId && !(target instanceof HTMLSelectElement)) {
        app.state = setActiveFace(app.state, faceId);
        render();
    }
}

function wire(): void {
    el<HTMLButtonElement>("connect").addEventListener("click", () => {
        connect().catch((err) => toast(String(err)));
    });
    el<HTMLButtonElement>("load-hedron").addEventListener("click", () => {
        loadHedron().catch((err) => toast(String(err)));
    });
    el<HTMLButtonElement>("back-button").addEventListener("click", () => {
        if (!app.state) return;
        app.state = breadcrumbBack(app.state);
        render();
    });
    el<HTMLInputElement>("mode-toggle").addEventListener("change", (ev) => {
        if (!app.state) return;
        const bipartite = (ev.target as HTMLInputElement).checked;
        app.state = setRenderMode(app.state, bipartite ? "bipartite" : "hull");
        render();
    });
}

document.addEventListener("DOMContentLoaded", wire);
