// Client-side graph editing state.
//
// The server is the source of truth for validation; this module mirrors
// the adjacency matrix so the editor can give instant feedback while the
// learner drags a connection, and serializes back to the API document.

import type {
  GraphDocument,
  GraphEdge,
  GraphNode,
  NodeKind,
  Origin,
  Relation,
} from './types.js';

export const EVENT_KINDS: NodeKind[] = ['Character', 'Behavior', 'Result'];
export const CC_KINDS: NodeKind[] = [
  'Condition',
  'Boolean',
  'Loop',
  'Variable',
];
export const ALL_KINDS: NodeKind[] = [...EVENT_KINDS, ...CC_KINDS];

const ADJACENCY: Record<string, Relation[]> = {
  'Character>Behavior': ['performs'],
  'Behavior>Result': ['produces'],
  'Behavior>Behavior': ['sequence'],
  'Condition>Behavior': ['guards'],
  'Condition>Result': ['guards'],
  'Loop>Behavior': ['repeats'],
  'Boolean>Condition': ['reads'],
  'Variable>Condition': ['reads'],
  'Variable>Result': ['writes'],
};

export function allowedRelations(from: NodeKind, to: NodeKind): Relation[] {
  return ADJACENCY[`${from}>${to}`] ?? [];
}

export function isCc(kind: NodeKind): boolean {
  return CC_KINDS.includes(kind);
}

export interface EditorGraph {
  canvases: string[];
  nodes: Map<string, GraphNode>;
  edges: Map<string, GraphEdge>;
}

export function emptyGraph(): EditorGraph {
  return { canvases: [], nodes: new Map(), edges: new Map() };
}

export function fromDocument(doc: GraphDocument): EditorGraph {
  const graph = emptyGraph();
  graph.canvases = [...doc.canvases];
  for (const node of doc.nodes) {
    graph.nodes.set(node.id, { ...node });
  }
  for (const edge of doc.edges) {
    graph.edges.set(edge.id, { ...edge });
  }
  return graph;
}

export function toDocument(graph: EditorGraph): GraphDocument {
  return {
    version: 1,
    canvases: [...graph.canvases],
    nodes: [...graph.nodes.values()].sort((a, b) =>
      a.id.localeCompare(b.id),
    ),
    edges: [...graph.edges.values()].sort((a, b) =>
      a.id.localeCompare(b.id),
    ),
  };
}

let counter = 0;

export function freshId(prefix: string): string {
  counter += 1;
  return `${prefix}:ui${String(counter).padStart(4, '0')}`;
}

export function resetIdCounter(): void {
  counter = 0;
}

export function addCanvas(graph: EditorGraph, canvasId: string): void {
  if (graph.canvases.includes(canvasId)) {
    throw new Error(`canvas already exists: ${canvasId}`);
  }
  graph.canvases.push(canvasId);
}

export function addNode(
  graph: EditorGraph,
  kind: NodeKind,
  label: string,
  canvasId: string,
  origin: Origin = 'learner',
): GraphNode {
  if (!graph.canvases.includes(canvasId)) {
    throw new Error(`unknown canvas: ${canvasId}`);
  }
  if (!label.trim()) {
    throw new Error('node label must be non-empty');
  }
  const node: GraphNode = {
    id: freshId(kind.toLowerCase()),
    kind,
    label,
    canvas_id: canvasId,
    description: null,
    image_ref: null,
    origin,
  };
  graph.nodes.set(node.id, node);
  return node;
}

export type ConnectResult =
  | { ok: true; edge: GraphEdge }
  | { ok: false; reason: string };

export function connect(
  graph: EditorGraph,
  fromId: string,
  toId: string,
): ConnectResult {
  const from = graph.nodes.get(fromId);
  const to = graph.nodes.get(toId);
  if (!from || !to) {
    return { ok: false, reason: 'both endpoints must exist' };
  }
  if (fromId === toId) {
    return { ok: false, reason: 'a node cannot connect to itself' };
  }
  const relations = allowedRelations(from.kind, to.kind);
  if (relations.length === 0) {
    return {
      ok: false,
      reason: `${from.kind} cannot connect to ${to.kind}`,
    };
  }
  const relation = relations[0];
  for (const edge of graph.edges.values()) {
    if (edge.from === fromId && edge.to === toId && edge.relation === relation) {
      return { ok: false, reason: 'that connection already exists' };
    }
  }
  const edge: GraphEdge = { id: freshId('e'), from: fromId, to: toId, relation };
  graph.edges.set(edge.id, edge);
  return { ok: true, edge };
}

export function removeNode(graph: EditorGraph, nodeId: string): void {
  if (!graph.nodes.delete(nodeId)) {
    return;
  }
  for (const [edgeId, edge] of [...graph.edges]) {
    if (edge.from === nodeId || edge.to === nodeId) {
      graph.edges.delete(edgeId);
    }
  }
}

export function removeEdge(graph: EditorGraph, edgeId: string): void {
  graph.edges.delete(edgeId);
}

export function nodesOnCanvas(
  graph: EditorGraph,
  canvasId: string,
): GraphNode[] {
  return [...graph.nodes.values()].filter((n) => n.canvas_id === canvasId);
}

/** Count additions relative to a baseline document (mirror of the server
 * diff; used for the optimistic "extended by" badge). */
export function localDiff(
  baseline: GraphDocument,
  graph: EditorGraph,
): { nodes: number; edges: number; adoptions: number } {
  const baseNodes = new Set(baseline.nodes.map((n) => n.id));
  const baseEdges = new Set(baseline.edges.map((e) => e.id));
  let nodes = 0;
  let edges = 0;
  let adoptions = 0;
  for (const node of graph.nodes.values()) {
    if (!baseNodes.has(node.id)) {
      nodes += 1;
      if (node.origin === 'remix-suggested') {
        adoptions += 1;
      }
    }
  }
  for (const edge of graph.edges.values()) {
    if (!baseEdges.has(edge.id)) {
      edges += 1;
    }
  }
  return { nodes, edges, adoptions };
}
