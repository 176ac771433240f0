"""Edge suggestions for a newly adopted remix node."""

from ..graph import GraphEdge, allowed_relations, is_cc
from ..scaffold.backends import StubTextBackend


def _legal_pairs(graph, new_node):
    """Every adjacency-legal wiring between the new node and the rest of
    the graph, in deterministic order."""
    pairs = []
    for other_id in sorted(graph.nodes):
        if other_id == new_node.id:
            continue
        other = graph.nodes[other_id]
        for relation in sorted(allowed_relations(new_node.kind, other.kind)):
            pairs.append((new_node.id, other_id, relation))
        for relation in sorted(allowed_relations(other.kind, new_node.kind)):
            pairs.append((other_id, new_node.id, relation))
    return pairs


def _parse_backend_lines(text):
    candidates = []
    for line in (text or "").splitlines():
        parts = line.split()
        if len(parts) == 3:
            candidates.append((parts[0], parts[2], parts[1]))
    return candidates


def suggest_edges(graph, new_node, backend=None) -> list:
    """Candidate GraphEdges wiring the new node into the graph.

    Backend output is never trusted: every candidate is checked against
    the adjacency matrix and deduplicated against existing edges.  When a
    compatible CC node exists, at least one CC wiring is always included.
    """
    backend = backend or StubTextBackend()
    legal = _legal_pairs(graph, new_node)
    legal_set = set(legal)

    default_text = "\n".join(f"{f} {rel} {t}" for f, t, rel in legal)
    raw = backend.generate("edge_suggestion", {
        "graph_size": len(graph.nodes),
        "new_node": new_node.id,
        "default_edges": default_text,
    })
    proposed = [c for c in _parse_backend_lines(raw) if c in legal_set]

    # Encourage computing-concept usage: make sure at least one CC wiring
    # is present whenever one is possible.
    has_cc = any(is_cc(graph.nodes[f].kind) or is_cc(graph.nodes[t].kind)
                 for f, t, _ in proposed
                 if f in graph.nodes and t in graph.nodes)
    if not has_cc:
        for f, t, rel in legal:
            other = t if f == new_node.id else f
            if is_cc(graph.nodes[other].kind) or is_cc(new_node.kind):
                proposed.append((f, t, rel))
                break

    existing = {(e.from_id, e.to_id, e.relation)
                for e in graph.edges.values()}
    seen = set()
    edges = []
    for f, t, rel in proposed:
        if (f, t, rel) in existing or (f, t, rel) in seen:
            continue
        seen.add((f, t, rel))
        edges.append(GraphEdge(id=f"suggest:{len(edges) + 1:03d}",
                               from_id=f, to_id=t, relation=rel))
    return edges
