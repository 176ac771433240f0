"""Versioned, human-readable graph document (stable key ordering)."""

import json

from ..errors import BlockTutorError
from .model import GraphEdge, GraphNode, NODE_KINDS, ORIGINS, RELATIONS, VisualGraph

GRAPH_DOC_VERSION = 1


class MalformedGraphDocument(BlockTutorError):
    code = "malformed_graph_document"


def serialize_graph(graph: VisualGraph) -> str:
    doc = {
        "version": GRAPH_DOC_VERSION,
        "canvases": list(graph.canvases),
        "nodes": [
            {
                "id": node.id,
                "kind": node.kind,
                "label": node.label,
                "canvas": node.canvas_id,
                "description": node.description,
                "image": node.image_ref,
                "origin": node.origin,
            }
            for _, node in sorted(graph.nodes.items())
        ],
        "edges": [
            {
                "id": edge.id,
                "from": edge.from_id,
                "to": edge.to_id,
                "relation": edge.relation,
            }
            for _, edge in sorted(graph.edges.items())
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def deserialize_graph(text: str) -> VisualGraph:
    """Parse a graph document.  Structural problems raise
    MalformedGraphDocument with a location; pedagogical problems (illegal
    wiring) are left for validate_graph to flag."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedGraphDocument(f"not valid JSON: {exc.msg}",
                                     location=f"offset {exc.pos}") from exc
    if not isinstance(doc, dict) or doc.get("version") != GRAPH_DOC_VERSION:
        raise MalformedGraphDocument(
            f"unsupported document version: {doc.get('version')!r}"
            if isinstance(doc, dict) else "document must be an object",
            location="/version")

    canvases = tuple(doc.get("canvases", []))
    nodes = {}
    for i, raw in enumerate(doc.get("nodes", [])):
        loc = f"/nodes/{i}"
        kind = raw.get("kind")
        if kind not in NODE_KINDS:
            raise MalformedGraphDocument(f"unknown node kind: {kind!r}",
                                         location=loc)
        if raw.get("origin", "learner") not in ORIGINS:
            raise MalformedGraphDocument(
                f"unknown origin: {raw.get('origin')!r}", location=loc)
        if raw.get("canvas") not in canvases:
            raise MalformedGraphDocument(
                f"unknown canvas: {raw.get('canvas')!r}", location=loc)
        if not raw.get("id") or not raw.get("label"):
            raise MalformedGraphDocument("node id and label are required",
                                         location=loc)
        node = GraphNode(id=raw["id"], kind=kind, label=raw["label"],
                         canvas_id=raw["canvas"],
                         description=raw.get("description"),
                         image_ref=raw.get("image"),
                         origin=raw.get("origin", "learner"))
        if node.id in nodes:
            raise MalformedGraphDocument(f"duplicate node id: {node.id}",
                                         location=loc)
        nodes[node.id] = node

    edges = {}
    triples = set()
    for i, raw in enumerate(doc.get("edges", [])):
        loc = f"/edges/{i}"
        relation = raw.get("relation")
        if relation not in RELATIONS:
            raise MalformedGraphDocument(f"unknown relation: {relation!r}",
                                         location=loc)
        for key in ("id", "from", "to"):
            if not raw.get(key):
                raise MalformedGraphDocument(f"edge {key} is required",
                                             location=loc)
        for endpoint in (raw["from"], raw["to"]):
            if endpoint not in nodes:
                raise MalformedGraphDocument(
                    f"edge endpoint not in document: {endpoint}", location=loc)
        if raw["from"] == raw["to"]:
            raise MalformedGraphDocument("self-edges are not allowed",
                                         location=loc)
        triple = (raw["from"], raw["to"], relation)
        if triple in triples or raw["id"] in edges:
            raise MalformedGraphDocument(f"duplicate edge: {raw['id']}",
                                         location=loc)
        triples.add(triple)
        edges[raw["id"]] = GraphEdge(id=raw["id"], from_id=raw["from"],
                                     to_id=raw["to"], relation=relation)
    return VisualGraph(canvases=canvases, nodes=nodes, edges=edges)
