from .extract import extract_reference_graph, humanize
from .model import (ADJACENCY, CC_KINDS, DuplicateEdge, EVENT_KINDS, GraphEdge,
                    GraphNode, KindViolation, NODE_KINDS, ORIGINS, RELATIONS,
                    UnknownId, VisualGraph, allowed_relations, is_cc)
from .ops import (GraphViolation, RemixMetrics, graph_diff, mutate_graph,
                  validate_graph)
from .serialize import (GRAPH_DOC_VERSION, MalformedGraphDocument,
                        deserialize_graph, serialize_graph)

__all__ = [
    "ADJACENCY", "CC_KINDS", "DuplicateEdge", "EVENT_KINDS",
    "GRAPH_DOC_VERSION", "GraphEdge", "GraphNode", "GraphViolation",
    "KindViolation", "MalformedGraphDocument", "NODE_KINDS", "ORIGINS",
    "RELATIONS", "RemixMetrics", "UnknownId", "VisualGraph",
    "allowed_relations", "deserialize_graph", "extract_reference_graph",
    "graph_diff", "humanize", "is_cc", "mutate_graph", "serialize_graph",
    "validate_graph",
]
