import { beforeEach, describe, expect, it } from 'vitest';

import type { ApiClient } from './api.js';
import {
  addCanvas,
  addNode,
  emptyGraph,
  resetIdCounter,
  toDocument,
} from './graph.js';
import type { EditorGraph } from './graph.js';
import { adoptAndWire, adoptProposal, applySuggestions } from './remix.js';
import type { EdgeCandidate, GraphDocument, RemixProposal } from './types.js';

const PROPOSAL: RemixProposal = {
  label: 'goal counter',
  description: 'Keep score when the ball reaches the net.',
  image_prompt: 'a scoreboard',
  negative_prompt: 'no text',
  image_ref: 'assets/goal.png',
  image_missing: false,
};

function seeded(): EditorGraph {
  const graph = emptyGraph();
  addCanvas(graph, 'main');
  return graph;
}

beforeEach(() => {
  resetIdCounter();
});

describe('adoptProposal', () => {
  it('creates a remix-suggested node carrying the proposal fields', () => {
    const graph = seeded();
    const node = adoptProposal(graph, PROPOSAL, 'main');
    expect(node.kind).toBe('Behavior');
    expect(node.origin).toBe('remix-suggested');
    expect(node.label).toBe('goal counter');
    expect(node.description).toBe(PROPOSAL.description);
    expect(node.image_ref).toBe('assets/goal.png');
    expect(graph.nodes.get(node.id)).toBe(node);
  });

  it('honours an explicit kind', () => {
    const graph = seeded();
    const node = adoptProposal(graph, PROPOSAL, 'main', 'Result');
    expect(node.kind).toBe('Result');
    expect(node.id.startsWith('result:')).toBe(true);
  });
});

describe('applySuggestions', () => {
  it('applies candidates the adjacency mirror accepts, up to the limit', () => {
    const graph = seeded();
    const cat = addNode(graph, 'Character', 'Cat', 'main');
    const run = addNode(graph, 'Behavior', 'run', 'main');
    const cheer = addNode(graph, 'Result', 'cheer', 'main');
    const candidates: EdgeCandidate[] = [
      { from: cat.id, to: run.id, relation: 'performs' },
      { from: run.id, to: cheer.id, relation: 'produces' },
      { from: run.id, to: run.id, relation: 'sequence' },
    ];
    const { applied, rejected } = applySuggestions(graph, candidates, 2);
    expect(applied.map((e) => e.relation)).toEqual(['performs', 'produces']);
    expect(rejected).toEqual([]);
    expect(graph.edges.size).toBe(2);
  });

  it('rejects illegal candidates and relation mismatches', () => {
    const graph = seeded();
    const cat = addNode(graph, 'Character', 'Cat', 'main');
    const run = addNode(graph, 'Behavior', 'run', 'main');
    const candidates: EdgeCandidate[] = [
      // Illegal direction: Behavior -> Character has no relation.
      { from: run.id, to: cat.id, relation: 'performs' },
      // Legal pair but the server named a different relation.
      { from: cat.id, to: run.id, relation: 'sequence' },
    ];
    const { applied, rejected } = applySuggestions(graph, candidates);
    expect(applied).toEqual([]);
    expect(rejected).toHaveLength(2);
    // The mismatch case must not leave a stray edge behind.
    expect(graph.edges.size).toBe(0);
  });

  it('stops at the limit and reports the rest as rejected-by-omission', () => {
    const graph = seeded();
    const a = addNode(graph, 'Behavior', 'a', 'main');
    const b = addNode(graph, 'Behavior', 'b', 'main');
    const c = addNode(graph, 'Behavior', 'c', 'main');
    const candidates: EdgeCandidate[] = [
      { from: a.id, to: b.id, relation: 'sequence' },
      { from: b.id, to: c.id, relation: 'sequence' },
      { from: a.id, to: c.id, relation: 'sequence' },
    ];
    const { applied } = applySuggestions(graph, candidates, 2);
    expect(applied).toHaveLength(2);
    expect(graph.edges.size).toBe(2);
  });
});

describe('adoptAndWire', () => {
  it('uploads the node, applies accepted suggestions, and uploads again', async () => {
    const graph = seeded();
    const cat = addNode(graph, 'Character', 'Cat', 'main');
    const puts: GraphDocument[] = [];
    let suggestedFor = '';
    const api = {
      putGraph: async (_s: string, doc: GraphDocument) => {
        puts.push(doc);
        return { violations: [], diff: { extended_nodes: 0, extended_edges: 0, suggestion_adoptions: 0 } };
      },
      suggestEdges: async (_s: string, nodeId: string) => {
        suggestedFor = nodeId;
        return [
          { from: cat.id, to: nodeId, relation: 'performs' },
        ] as EdgeCandidate[];
      },
    } as unknown as ApiClient;

    const result = await adoptAndWire(api, 's1', graph, PROPOSAL, 'main');
    expect(result.node.origin).toBe('remix-suggested');
    expect(suggestedFor).toBe(result.node.id);
    expect(result.appliedEdges).toHaveLength(1);
    expect(result.rejectedCandidates).toEqual([]);
    expect(puts).toHaveLength(2);
    expect(puts[1].edges).toHaveLength(1);
    expect(toDocument(graph).edges).toHaveLength(1);
  });

  it('skips the second upload when no suggestion applied', async () => {
    const graph = seeded();
    const puts: GraphDocument[] = [];
    const api = {
      putGraph: async (_s: string, doc: GraphDocument) => {
        puts.push(doc);
        return { violations: [], diff: { extended_nodes: 0, extended_edges: 0, suggestion_adoptions: 0 } };
      },
      suggestEdges: async () => [] as EdgeCandidate[],
    } as unknown as ApiClient;

    const result = await adoptAndWire(api, 's1', graph, PROPOSAL, 'main');
    expect(result.appliedEdges).toEqual([]);
    expect(puts).toHaveLength(1);
  });
});
