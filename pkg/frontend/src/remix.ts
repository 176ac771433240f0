// Remix panel logic: request proposals, adopt one as a graph node, and
// pull adjacency-checked edge suggestions for wiring it in.

import type { ApiClient } from './api.js';
import type { EditorGraph } from './graph.js';
import { connect, freshId } from './graph.js';
import type {
  EdgeCandidate,
  GraphEdge,
  GraphNode,
  NodeKind,
  RemixProposal,
} from './types.js';

export interface AdoptionResult {
  node: GraphNode;
  appliedEdges: GraphEdge[];
  rejectedCandidates: EdgeCandidate[];
}

/** Turn an accepted proposal into a Behavior node on the target canvas.
 * Remix ideas describe something the project should do, so Behavior is
 * the default; the learner can re-kind it by editing the palette copy. */
export function adoptProposal(
  graph: EditorGraph,
  proposal: RemixProposal,
  canvasId: string,
  kind: NodeKind = 'Behavior',
): GraphNode {
  const node: GraphNode = {
    id: freshId(kind.toLowerCase()),
    kind,
    label: proposal.label,
    canvas_id: canvasId,
    description: proposal.description,
    image_ref: proposal.image_ref,
    origin: 'remix-suggested',
  };
  graph.nodes.set(node.id, node);
  return node;
}

/** Apply server edge suggestions to the local graph, keeping only the
 * ones the local adjacency mirror also accepts. */
export function applySuggestions(
  graph: EditorGraph,
  candidates: EdgeCandidate[],
  limit = 2,
): { applied: GraphEdge[]; rejected: EdgeCandidate[] } {
  const applied: GraphEdge[] = [];
  const rejected: EdgeCandidate[] = [];
  for (const candidate of candidates) {
    if (applied.length >= limit) {
      break;
    }
    const result = connect(graph, candidate.from, candidate.to);
    if (result.ok && result.edge.relation === candidate.relation) {
      applied.push(result.edge);
    } else {
      if (result.ok) {
        // Relation mismatch between mirror and server; drop the edge.
        graph.edges.delete(result.edge.id);
      }
      rejected.push(candidate);
    }
  }
  return { applied, rejected };
}

export async function adoptAndWire(
  api: ApiClient,
  sessionId: string,
  graph: EditorGraph,
  proposal: RemixProposal,
  canvasId: string,
): Promise<AdoptionResult> {
  const node = adoptProposal(graph, proposal, canvasId);
  // The server needs to know about the node before it can suggest edges.
  const { toDocument } = await import('./graph.js');
  await api.putGraph(sessionId, toDocument(graph));
  const candidates = await api.suggestEdges(sessionId, node.id);
  const { applied, rejected } = applySuggestions(graph, candidates);
  if (applied.length > 0) {
    await api.putGraph(sessionId, toDocument(graph));
  }
  return { node, appliedEdges: applied, rejectedCandidates: rejected };
}
