"""Graph mutation, pedagogical validation, and remix diff metrics."""

from dataclasses import dataclass

from .model import GraphEdge, GraphNode, VisualGraph, allowed_relations, is_cc

MUTATIONS = ("add_canvas", "add_node", "add_edge", "remove_node",
             "remove_edge", "set_label")


@dataclass(frozen=True)
class GraphViolation:
    kind: str
    node_id: str
    message: str


@dataclass(frozen=True)
class RemixMetrics:
    extended_nodes: int
    extended_edges: int
    suggestion_adoptions: int


def mutate_graph(graph: VisualGraph, op: str, **kwargs) -> VisualGraph:
    """Apply one mutation and return a new graph; the input is untouched.

    Removals cascade: removing a node drops its incident edges.
    """
    if op == "add_canvas":
        return graph.with_canvas(kwargs["canvas_id"])
    if op == "add_node":
        node = kwargs.get("node") or GraphNode(**kwargs)
        return graph.with_node(node)
    if op == "add_edge":
        edge = kwargs.get("edge") or GraphEdge(**kwargs)
        return graph.with_edge(edge)
    if op == "remove_node":
        return graph.without_node(kwargs["node_id"])
    if op == "remove_edge":
        return graph.without_edge(kwargs["edge_id"])
    if op == "set_label":
        return graph.with_label(kwargs["node_id"], kwargs["label"])
    raise ValueError(f"unknown mutation: {op}")


def validate_graph(graph: VisualGraph) -> list:
    """Pedagogical well-formedness checks beyond the adjacency matrix.

    Flags: CC nodes whose only neighbors are Characters, disconnected CC
    nodes, Behavior nodes with no Character source, and Result nodes with
    no incoming edge.  Empty list means the graph is well formed.
    """
    violations = []
    incoming = {}
    for edge_id in sorted(graph.edges):
        edge = graph.edges[edge_id]
        incoming.setdefault(edge.to_id, []).append(edge)
        # Deserialized learner graphs can carry illegal wiring; re-check
        # the adjacency matrix here rather than trusting construction.
        if edge.from_id in graph.nodes and edge.to_id in graph.nodes:
            from_kind = graph.nodes[edge.from_id].kind
            to_kind = graph.nodes[edge.to_id].kind
            if edge.relation not in allowed_relations(from_kind, to_kind):
                violations.append(GraphViolation(
                    "IllegalEdge", edge.from_id,
                    f"edge {edge_id}: {edge.relation!r} not permitted from "
                    f"{from_kind} to {to_kind}"))

    # Which behaviors can be traced back to a Character through performs
    # (directly, or downstream through sequence edges)?
    performed = {e.to_id for e in graph.edges.values()
                 if e.relation == "performs"
                 and graph.nodes[e.from_id].kind == "Character"}
    changed = True
    while changed:
        changed = False
        for e in graph.edges.values():
            if (e.relation == "sequence" and e.from_id in performed
                    and e.to_id not in performed):
                performed.add(e.to_id)
                changed = True

    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        neighbors = graph.neighbors(node_id)
        if is_cc(node.kind):
            if not neighbors:
                violations.append(GraphViolation(
                    "DisconnectedCC", node_id,
                    f"{node.kind} node {node.label!r} has no edges"))
            elif all(graph.nodes[n].kind == "Character" for n in neighbors):
                violations.append(GraphViolation(
                    "CCBetweenCharacters", node_id,
                    f"{node.kind} node {node.label!r} connects only "
                    f"Character nodes"))
        elif node.kind == "Behavior" and node_id not in performed:
            violations.append(GraphViolation(
                "OrphanBehavior", node_id,
                f"Behavior {node.label!r} has no performing Character"))
        elif node.kind == "Result" and node_id not in incoming:
            violations.append(GraphViolation(
                "OrphanResult", node_id,
                f"Result {node.label!r} has no incoming edge"))
    return violations


def graph_diff(original: VisualGraph, remixed: VisualGraph) -> RemixMetrics:
    """Set-difference metrics by stable id (not isomorphism matching)."""
    new_nodes = set(remixed.nodes) - set(original.nodes)
    new_edge_ids = set(remixed.edges) - set(original.edges)
    adoptions = sum(1 for node_id in new_nodes
                    if remixed.nodes[node_id].origin == "remix-suggested")
    return RemixMetrics(extended_nodes=len(new_nodes),
                        extended_edges=len(new_edge_ids),
                        suggestion_adoptions=adoptions)
