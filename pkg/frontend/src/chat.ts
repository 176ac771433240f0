// Chat panel state: transcript entries, dialogue status, and the
// highlight mini-diagram model derived from turn responses.

import type { ApiClient } from './api.js';
import { ApiRequestError } from './api.js';
import type { Highlight, TurnResponse } from './types.js';

export interface ChatEntry {
  role: 'learner' | 'tutor' | 'notice';
  text: string;
  state: string;
}

export interface MiniDiagram {
  blocks: { id: string; isTarget: boolean }[];
  edges: { from: string; to: string; kind: string }[];
  summary: string;
}

export function buildMiniDiagram(highlight: Highlight): MiniDiagram {
  return {
    blocks: highlight.blocks.map((id) => ({
      id,
      isTarget: id === highlight.target,
    })),
    edges: highlight.edges.map(([from, to, kind]) => ({ from, to, kind })),
    summary: highlight.summary,
  };
}

export class ChatController {
  readonly entries: ChatEntry[] = [];
  state = 'AwaitQuestion';
  busy = false;
  referral = false;
  lastHighlight: Highlight | null = null;

  private readonly api: ApiClient;
  private readonly sessionId: string;

  constructor(api: ApiClient, sessionId: string) {
    this.api = api;
    this.sessionId = sessionId;
  }

  get resolved(): boolean {
    return this.state === 'Resolved';
  }

  /** Send a free-text utterance or a button (got_it / dont_know). */
  async send(input: string): Promise<TurnResponse | null> {
    if (this.busy || this.resolved) {
      return null;
    }
    this.busy = true;
    this.entries.push({ role: 'learner', text: input, state: this.state });
    try {
      const response = await this.api.sendTurn(this.sessionId, input);
      this.state = response.state;
      this.referral = response.referral;
      if (response.highlight) {
        this.lastHighlight = response.highlight;
      }
      for (const message of response.messages) {
        this.entries.push({
          role: 'tutor',
          text: message,
          state: response.state,
        });
      }
      if (response.moderation_blocked) {
        this.entries.push({
          role: 'notice',
          text: `Message filtered (${response.moderation_blocked}).`,
          state: response.state,
        });
      }
      return response;
    } catch (error) {
      if (error instanceof ApiRequestError && error.status === 409) {
        this.entries.push({
          role: 'notice',
          text:
            error.code === 'session_resolved'
              ? 'This conversation is finished. Start a new session to keep going.'
              : 'Hold on, the tutor is still thinking about your last message.',
          state: this.state,
        });
        if (error.code === 'session_resolved') {
          this.state = 'Resolved';
        }
        return null;
      }
      throw error;
    } finally {
      this.busy = false;
    }
  }
}
