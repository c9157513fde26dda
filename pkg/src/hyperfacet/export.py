"""Export helpers: GraphML via bipartite expansion, and JSON Schema
validation of the canonical facet export."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import jsonschema

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"

# facet export: canonical hypergraph JSON plus per-edge facet fields
FACET_EXPORT_SCHEMA = {
    "type": "object",
    "required": ["vertices", "edges"],
    "additionalProperties": False,
    "properties": {
        "vertices": {"type": "array", "items": {"type": "string"}},
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "members", "empty"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "members": {"type": "array", "items": {"type": "string"}},
                    "empty": {"type": "boolean"},
                    "edge_source": {"type": "string"},
                    "class": {"type": "array", "items": {"type": "string"}},
                    "weight": {"type": "number", "exclusiveMinimum": 0},
                },
                "dependentRequired": {"class": ["weight"], "weight": ["class"]},
            },
        },
    },
}


def validate_facet_export(payload: dict) -> None:
    """Raise jsonschema.ValidationError if the payload does not match the
    canonical facet export shape."""
    jsonschema.validate(payload, FACET_EXPORT_SCHEMA)


def facet_to_graphml(payload: dict) -> bytes:
    """Bipartite GraphML: one node per vertex, one node per hyperedge
    (carrying weight, emptiness, and source or class), and a plain edge
    linking each hyperedge node to each member node. GraphML itself has no
    hyperedges, so this expansion is the interchange form."""
    ET.register_namespace("", GRAPHML_NS)
    root = ET.Element(f"{{{GRAPHML_NS}}}graphml")
    keys = [
        ("kind", "node", "string"),
        ("weight", "node", "double"),
        ("empty", "node", "boolean"),
        ("source_value", "node", "string"),
        ("class_values", "node", "string"),
    ]
    for name, target, kind in keys:
        ET.SubElement(
            root,
            f"{{{GRAPHML_NS}}}key",
            {"id": name, "for": target, "attr.name": name, "attr.type": kind},
        )
    graph = ET.SubElement(root, f"{{{GRAPHML_NS}}}graph", {"id": "facet", "edgedefault": "undirected"})

    def node(node_id: str, data: dict) -> None:
        el = ET.SubElement(graph, f"{{{GRAPHML_NS}}}node", {"id": node_id})
        for k, v in data.items():
            d = ET.SubElement(el, f"{{{GRAPHML_NS}}}data", {"key": k})
            d.text = v

    for v in payload["vertices"]:
        node(f"v::{v}", {"kind": "vertex"})
    for e in payload["edges"]:
        data = {"kind": "hyperedge", "empty": "true" if e["empty"] else "false"}
        if "weight" in e:
            data["weight"] = str(e["weight"])
        if "edge_source" in e:
            data["source_value"] = e["edge_source"]
        if "class" in e:
            data["class_values"] = json.dumps(e["class"], separators=(",", ":"))
        node(f"e::{e['id']}", data)
    n = 0
    for e in payload["edges"]:
        for m in e["members"]:
            n += 1
            ET.SubElement(
                graph,
                f"{{{GRAPHML_NS}}}edge",
                {"id": f"l{n}", "source": f"e::{e['id']}", "target": f"v::{m}"},
            )
    ET.indent(root)
    return ET.tostring(root, encoding="utf-8", xml_declaration=True)
