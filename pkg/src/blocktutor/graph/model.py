"""The event / computing-concept visual graph model.

Seven node kinds: Character, Behavior, Result are event nodes; Condition,
Boolean, Loop, Variable are computing-concept (CC) nodes.  Edges are typed
and only the pairs in ADJACENCY are legal.
"""

from dataclasses import dataclass, field, replace

from ..errors import BlockTutorError

EVENT_KINDS = ("Character", "Behavior", "Result")
CC_KINDS = ("Condition", "Boolean", "Loop", "Variable")
NODE_KINDS = EVENT_KINDS + CC_KINDS

RELATIONS = ("performs", "produces", "guards", "repeats", "reads", "writes",
             "sequence")

ORIGINS = ("system", "learner", "remix-suggested")

# Legal wiring between node kinds.  Everything absent is a KindViolation.
ADJACENCY = {
    ("Character", "Behavior"): frozenset({"performs"}),
    ("Behavior", "Result"): frozenset({"produces"}),
    ("Behavior", "Behavior"): frozenset({"sequence"}),
    ("Condition", "Behavior"): frozenset({"guards"}),
    ("Condition", "Result"): frozenset({"guards"}),
    ("Loop", "Behavior"): frozenset({"repeats"}),
    ("Boolean", "Condition"): frozenset({"reads"}),
    ("Variable", "Condition"): frozenset({"reads"}),
    ("Variable", "Result"): frozenset({"writes"}),
}


class UnknownId(BlockTutorError):
    code = "unknown_id"


class DuplicateEdge(BlockTutorError):
    code = "duplicate_edge"


class KindViolation(BlockTutorError):
    code = "kind_violation"


def allowed_relations(from_kind, to_kind):
    return ADJACENCY.get((from_kind, to_kind), frozenset())


def is_cc(kind):
    return kind in CC_KINDS


@dataclass(frozen=True)
class GraphNode:
    id: str
    kind: str
    label: str
    canvas_id: str
    description: str | None = None
    image_ref: str | None = None
    origin: str = "learner"

    def __post_init__(self):
        if self.kind not in NODE_KINDS:
            raise KindViolation(f"unknown node kind: {self.kind}")
        if self.origin not in ORIGINS:
            raise KindViolation(f"unknown node origin: {self.origin}")
        if not self.label:
            raise KindViolation("node label must be non-empty")


@dataclass(frozen=True)
class GraphEdge:
    id: str
    from_id: str
    to_id: str
    relation: str

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise KindViolation(f"unknown relation: {self.relation}")
        if self.from_id == self.to_id:
            raise KindViolation("self-edges are not allowed")


@dataclass(frozen=True)
class VisualGraph:
    canvases: tuple = ()
    nodes: dict = field(default_factory=dict)   # node-id -> GraphNode
    edges: dict = field(default_factory=dict)   # edge-id -> GraphEdge

    def with_canvas(self, canvas_id):
        if canvas_id in self.canvases:
            raise DuplicateEdge(f"canvas already exists: {canvas_id}")
        return replace(self, canvases=self.canvases + (canvas_id,))

    def with_node(self, node):
        if node.canvas_id not in self.canvases:
            raise UnknownId(f"unknown canvas: {node.canvas_id}")
        if node.id in self.nodes:
            raise DuplicateEdge(f"node already exists: {node.id}")
        return replace(self, nodes={**self.nodes, node.id: node})

    def with_edge(self, edge):
        for endpoint in (edge.from_id, edge.to_id):
            if endpoint not in self.nodes:
                raise UnknownId(f"unknown node: {endpoint}")
        if edge.id in self.edges:
            raise DuplicateEdge(f"edge already exists: {edge.id}")
        triple = (edge.from_id, edge.to_id, edge.relation)
        for other in self.edges.values():
            if (other.from_id, other.to_id, other.relation) == triple:
                raise DuplicateEdge(f"duplicate edge triple: {triple}")
        from_kind = self.nodes[edge.from_id].kind
        to_kind = self.nodes[edge.to_id].kind
        if edge.relation not in allowed_relations(from_kind, to_kind):
            raise KindViolation(
                f"relation {edge.relation!r} not permitted from "
                f"{from_kind} to {to_kind}")
        return replace(self, edges={**self.edges, edge.id: edge})

    def without_node(self, node_id):
        if node_id not in self.nodes:
            raise UnknownId(f"unknown node: {node_id}")
        nodes = {k: v for k, v in self.nodes.items() if k != node_id}
        edges = {k: v for k, v in self.edges.items()
                 if node_id not in (v.from_id, v.to_id)}
        return replace(self, nodes=nodes, edges=edges)

    def without_edge(self, edge_id):
        if edge_id not in self.edges:
            raise UnknownId(f"unknown edge: {edge_id}")
        return replace(self,
                       edges={k: v for k, v in self.edges.items()
                              if k != edge_id})

    def with_label(self, node_id, label):
        if node_id not in self.nodes:
            raise UnknownId(f"unknown node: {node_id}")
        node = replace(self.nodes[node_id], label=label)
        return replace(self, nodes={**self.nodes, node_id: node})

    def neighbors(self, node_id):
        """Ids of nodes adjacent to node_id in either direction."""
        out = set()
        for edge in self.edges.values():
            if edge.from_id == node_id:
                out.add(edge.to_id)
            elif edge.to_id == node_id:
                out.add(edge.from_id)
        return out
