// Shared types mirroring the HTTP API documents.

export type NodeKind =
  | 'Character'
  | 'Behavior'
  | 'Result'
  | 'Condition'
  | 'Boolean'
  | 'Loop'
  | 'Variable';

export type Relation =
  | 'performs'
  | 'produces'
  | 'guards'
  | 'repeats'
  | 'reads'
  | 'writes'
  | 'sequence';

export type Origin = 'system' | 'learner' | 'remix-suggested';

export interface GraphNode {
  id: string;
  kind: NodeKind;
  label: string;
  canvas_id: string;
  description: string | null;
  image_ref: string | null;
  origin: Origin;
}

export interface GraphEdge {
  id: string;
  from: string;
  to: string;
  relation: Relation;
}

export interface GraphDocument {
  version: number;
  canvases: string[];
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface CtReport {
  dimensions: Record<string, number>;
  total: number;
  evidence: Record<string, [string, string][]>;
}

export interface SessionCreated {
  session_id: string;
  ct_report: CtReport;
  category_stats: { counts: Record<string, number>; total: number } | null;
  reference_graph_summary: { canvases: number; nodes: number; edges: number };
  reference_graph: GraphDocument;
}

export interface Highlight {
  target: string;
  blocks: string[];
  edges: [string, string, string][];
  summary: string;
}

export interface TurnResponse {
  state: string;
  states_visited: string[];
  messages: string[];
  judgment: string | null;
  moderation_blocked: string | null;
  referral: boolean;
  highlight: Highlight | null;
}

export interface GraphPutResponse {
  violations: { kind: string; node: string; message: string }[];
  diff: {
    extended_nodes: number;
    extended_edges: number;
    suggestion_adoptions: number;
  };
}

export interface RemixProposal {
  label: string;
  description: string;
  image_prompt: string;
  negative_prompt: string;
  image_ref: string | null;
  image_missing: boolean;
}

export interface EdgeCandidate {
  from: string;
  to: string;
  relation: Relation;
}

export interface ApiError {
  error: string;
  message: string;
}
