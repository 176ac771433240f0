// Thin typed client over the scaffolding service HTTP API.

import type {
  EdgeCandidate,
  GraphDocument,
  GraphPutResponse,
  RemixProposal,
  SessionCreated,
  TurnResponse,
} from './types.js';

export class ApiRequestError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseError(response: Response): Promise<ApiRequestError> {
  let code = 'unknown';
  let message = `request failed with status ${response.status}`;
  try {
    const body = await response.json();
    if (body && typeof body === 'object') {
      code = typeof body.error === 'string' ? body.error : code;
      message = typeof body.message === 'string' ? body.message : message;
    }
  } catch {
    // non-JSON error body; keep the defaults
  }
  return new ApiRequestError(response.status, code, message);
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl = '', fetchImpl: FetchLike = fetch.bind(globalThis)) {
    this.baseUrl = baseUrl.replace(/\/+$/, '');
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  async createSession(archive: ArrayBuffer | Blob): Promise<SessionCreated> {
    return this.request<SessionCreated>('/sessions', {
      method: 'POST',
      body: archive,
      headers: { 'Content-Type': 'application/octet-stream' },
    });
  }

  async getGraph(sessionId: string): Promise<GraphDocument> {
    return this.request<GraphDocument>(`/sessions/${sessionId}/graph`);
  }

  async putGraph(
    sessionId: string,
    graph: GraphDocument,
  ): Promise<GraphPutResponse> {
    return this.request<GraphPutResponse>(`/sessions/${sessionId}/graph`, {
      method: 'PUT',
      body: JSON.stringify(graph),
      headers: { 'Content-Type': 'application/json' },
    });
  }

  async sendTurn(sessionId: string, input: string): Promise<TurnResponse> {
    return this.request<TurnResponse>(`/sessions/${sessionId}/turns`, {
      method: 'POST',
      body: JSON.stringify({ input }),
      headers: { 'Content-Type': 'application/json' },
    });
  }

  async requestRemix(
    sessionId: string,
    utterance: string,
    targetCanvas: string,
  ): Promise<RemixProposal[]> {
    const body = await this.request<{ proposals: RemixProposal[] }>(
      `/sessions/${sessionId}/remix`,
      {
        method: 'POST',
        body: JSON.stringify({ utterance, target_canvas: targetCanvas }),
        headers: { 'Content-Type': 'application/json' },
      },
    );
    return body.proposals;
  }

  async suggestEdges(
    sessionId: string,
    nodeId: string,
  ): Promise<EdgeCandidate[]> {
    const body = await this.request<{ candidates: EdgeCandidate[] }>(
      `/sessions/${sessionId}/edge-suggestions`,
      {
        method: 'POST',
        body: JSON.stringify({ node_id: nodeId }),
        headers: { 'Content-Type': 'application/json' },
      },
    );
    return body.candidates;
  }

  async getTranscript(sessionId: string): Promise<{
    state: string;
    turns: { role: string; content: string; state: string }[];
  }> {
    return this.request(`/sessions/${sessionId}/transcript`);
  }
}
