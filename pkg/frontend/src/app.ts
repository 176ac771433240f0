// Application wiring: session bootstrap from an uploaded archive, the
// graph editor, the tutoring chat panel, and the remix idea panel.

import { ApiClient, ApiRequestError } from './api.js';
import { GraphCanvas } from './canvas.js';
import { buildMiniDiagram, ChatController } from './chat.js';
import {
  addCanvas,
  addNode,
  ALL_KINDS,
  fromDocument,
  localDiff,
  toDocument,
} from './graph.js';
import type { EditorGraph } from './graph.js';
import { LayoutStore } from './layout.js';
import { adoptAndWire } from './remix.js';
import type {
  GraphDocument,
  Highlight,
  NodeKind,
  RemixProposal,
  SessionCreated,
} from './types.js';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element: #${id}`);
  }
  return node as T;
}

class App {
  private readonly api = new ApiClient();
  private sessionId: string | null = null;
  private graph: EditorGraph | null = null;
  private baseline: GraphDocument | null = null;
  private layout: LayoutStore | null = null;
  private canvas: GraphCanvas | null = null;
  private chat: ChatController | null = null;
  private activeCanvas = '';
  private saveTimer: number | null = null;

  start(): void {
    el<HTMLInputElement>('archive-input').addEventListener('change', (e) => {
      const input = e.target as HTMLInputElement;
      const file = input.files?.[0];
      if (file) {
        void this.createSession(file);
      }
    });
    el<HTMLFormElement>('chat-form').addEventListener('submit', (e) => {
      e.preventDefault();
      const box = el<HTMLInputElement>('chat-input');
      const text = box.value.trim();
      if (text) {
        box.value = '';
        void this.sendChat(text);
      }
    });
    el<HTMLButtonElement>('btn-got-it').addEventListener('click', () => {
      void this.sendChat('got_it');
    });
    el<HTMLButtonElement>('btn-dont-know').addEventListener('click', () => {
      void this.sendChat('dont_know');
    });
    el<HTMLFormElement>('remix-form').addEventListener('submit', (e) => {
      e.preventDefault();
      const box = el<HTMLInputElement>('remix-input');
      const text = box.value.trim();
      if (text) {
        void this.requestRemix(text);
      }
    });
    el<HTMLButtonElement>('btn-add-canvas').addEventListener('click', () => {
      this.addEventCanvas();
    });
  }

  private status(message: string): void {
    el('status-bar').textContent = message;
  }

  private async createSession(file: File): Promise<void> {
    this.status('Uploading project…');
    let created: SessionCreated;
    try {
      created = await this.api.createSession(file);
    } catch (error) {
      this.status(
        error instanceof ApiRequestError
          ? `Upload failed: ${error.message}`
          : 'Upload failed: is the service running?',
      );
      return;
    }
    this.sessionId = created.session_id;
    this.baseline = created.reference_graph;
    this.graph = fromDocument(created.reference_graph);
    this.layout = new LayoutStore(created.session_id);
    this.activeCanvas = this.graph.canvases[0] ?? '';
    this.chat = new ChatController(this.api, created.session_id);

    el('workspace').classList.remove('hidden');
    this.renderCtReport(created);
    this.buildPalette();
    this.buildCanvasTabs();

    const host = el('canvas-host');
    host.innerHTML = '';
    this.canvas = new GraphCanvas(host, this.graph, this.layout, this.activeCanvas, {
      onChange: () => this.onGraphChange(),
      onStatus: (message) => this.status(message),
    });
    this.canvas.render();
    this.renderChat();
    this.status('Project loaded. Ask the tutor a question, or edit the graph.');
  }

  private renderCtReport(created: SessionCreated): void {
    const table = el('ct-report');
    table.innerHTML = '';
    for (const [dimension, level] of Object.entries(created.ct_report.dimensions)) {
      const row = document.createElement('tr');
      const name = document.createElement('td');
      name.textContent = dimension.replace(/_/g, ' ');
      const value = document.createElement('td');
      value.textContent = String(level);
      row.append(name, value);
      table.appendChild(row);
    }
    const totalRow = document.createElement('tr');
    totalRow.className = 'ct-total';
    const totalName = document.createElement('td');
    totalName.textContent = 'total';
    const totalValue = document.createElement('td');
    totalValue.textContent = String(created.ct_report.total);
    totalRow.append(totalName, totalValue);
    table.appendChild(totalRow);
  }

  private buildPalette(): void {
    const palette = el('palette');
    palette.innerHTML = '';
    for (const kind of ALL_KINDS) {
      const button = document.createElement('button');
      button.className = 'palette-item';
      button.textContent = kind;
      button.addEventListener('click', () => this.addNodeOfKind(kind));
      palette.appendChild(button);
    }
  }

  private addNodeOfKind(kind: NodeKind): void {
    if (!this.graph || !this.activeCanvas) {
      return;
    }
    const label = window.prompt(`Label for the new ${kind} node:`)?.trim();
    if (!label) {
      return;
    }
    addNode(this.graph, kind, label, this.activeCanvas);
    this.canvas?.render();
    this.onGraphChange();
  }

  private buildCanvasTabs(): void {
    if (!this.graph) {
      return;
    }
    const tabs = el('canvas-tabs');
    tabs.innerHTML = '';
    for (const canvasId of this.graph.canvases) {
      const tab = document.createElement('button');
      tab.className = 'canvas-tab';
      if (canvasId === this.activeCanvas) {
        tab.classList.add('active');
      }
      tab.textContent = canvasId;
      tab.addEventListener('click', () => {
        this.activeCanvas = canvasId;
        this.buildCanvasTabs();
        this.canvas?.showCanvas(canvasId);
      });
      tabs.appendChild(tab);
    }
  }

  private addEventCanvas(): void {
    if (!this.graph) {
      return;
    }
    const name = window.prompt('Name for the new event canvas:')?.trim();
    if (!name) {
      return;
    }
    try {
      addCanvas(this.graph, name);
    } catch (error) {
      this.status(error instanceof Error ? error.message : String(error));
      return;
    }
    this.activeCanvas = name;
    this.buildCanvasTabs();
    this.canvas?.showCanvas(name);
    this.onGraphChange();
  }

  private onGraphChange(): void {
    if (this.baseline && this.graph) {
      const diff = localDiff(this.baseline, this.graph);
      el('diff-badge').textContent =
        `+${diff.nodes} nodes, +${diff.edges} edges` +
        (diff.adoptions ? `, ${diff.adoptions} adopted ideas` : '');
    }
    // Debounce saves so dragging out a batch of edits is one PUT.
    if (this.saveTimer !== null) {
      window.clearTimeout(this.saveTimer);
    }
    this.saveTimer = window.setTimeout(() => {
      this.saveTimer = null;
      void this.saveGraph();
    }, 600);
  }

  private async saveGraph(): Promise<void> {
    if (!this.sessionId || !this.graph) {
      return;
    }
    try {
      const result = await this.api.putGraph(this.sessionId, toDocument(this.graph));
      if (result.violations.length > 0) {
        this.status(
          `Saved with ${result.violations.length} rule warning(s): ` +
            result.violations.map((v) => v.message).join('; '),
        );
      } else {
        this.status('Graph saved.');
      }
    } catch (error) {
      this.status(
        error instanceof ApiRequestError
          ? `Save failed: ${error.message}`
          : 'Save failed.',
      );
    }
  }

  private async sendChat(input: string): Promise<void> {
    if (!this.chat) {
      return;
    }
    const response = await this.chat.send(input);
    this.renderChat();
    if (response?.highlight) {
      this.applyHighlight(response.highlight);
    }
    if (this.chat.referral) {
      this.status('The tutor suggests asking your teacher about this one.');
    }
  }

  private applyHighlight(highlight: Highlight): void {
    this.canvas?.setHighlight(highlight.blocks);
    const diagram = buildMiniDiagram(highlight);
    const host = el('mini-diagram');
    host.innerHTML = '';
    const summary = document.createElement('p');
    summary.className = 'mini-summary';
    summary.textContent = diagram.summary;
    host.appendChild(summary);
    const chain = document.createElement('div');
    chain.className = 'mini-chain';
    for (const block of diagram.blocks) {
      const chip = document.createElement('span');
      chip.className = block.isTarget ? 'mini-block target' : 'mini-block';
      chip.textContent = block.id;
      chain.appendChild(chip);
    }
    host.appendChild(chain);
  }

  private renderChat(): void {
    if (!this.chat) {
      return;
    }
    const log = el('chat-log');
    log.innerHTML = '';
    for (const entry of this.chat.entries) {
      const bubble = document.createElement('div');
      bubble.className = `chat-entry chat-${entry.role}`;
      bubble.textContent = entry.text;
      log.appendChild(bubble);
    }
    el('chat-state').textContent = this.chat.state;
    log.scrollTop = log.scrollHeight;
    const done = this.chat.resolved;
    el<HTMLInputElement>('chat-input').disabled = done;
    el<HTMLButtonElement>('btn-got-it').disabled = done;
    el<HTMLButtonElement>('btn-dont-know').disabled = done;
  }

  private async requestRemix(utterance: string): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    this.status('Asking for remix ideas…');
    let proposals: RemixProposal[];
    try {
      proposals = await this.api.requestRemix(
        this.sessionId,
        utterance,
        this.activeCanvas,
      );
    } catch (error) {
      this.status(
        error instanceof ApiRequestError
          ? `Remix request failed: ${error.message}`
          : 'Remix request failed.',
      );
      return;
    }
    this.renderProposals(proposals);
    this.status('Pick an idea to add it to your canvas.');
  }

  private renderProposals(proposals: RemixProposal[]): void {
    const host = el('remix-proposals');
    host.innerHTML = '';
    for (const proposal of proposals) {
      const card = document.createElement('div');
      card.className = 'remix-card';
      const title = document.createElement('h4');
      title.textContent = proposal.label;
      const body = document.createElement('p');
      body.textContent = proposal.description;
      card.append(title, body);
      if (proposal.image_missing) {
        const note = document.createElement('p');
        note.className = 'remix-note';
        note.textContent = 'No picture yet for this idea.';
        card.appendChild(note);
      }
      const adopt = document.createElement('button');
      adopt.textContent = 'Add to canvas';
      adopt.addEventListener('click', () => {
        void this.adopt(proposal);
      });
      card.appendChild(adopt);
      host.appendChild(card);
    }
  }

  private async adopt(proposal: RemixProposal): Promise<void> {
    if (!this.sessionId || !this.graph) {
      return;
    }
    try {
      const result = await adoptAndWire(
        this.api,
        this.sessionId,
        this.graph,
        proposal,
        this.activeCanvas,
      );
      this.canvas?.render();
      this.onGraphChange();
      this.status(
        result.appliedEdges.length > 0
          ? `Added "${proposal.label}" and wired ${result.appliedEdges.length} connection(s).`
          : `Added "${proposal.label}". Connect it yourself by clicking two nodes.`,
      );
    } catch (error) {
      this.status(
        error instanceof ApiRequestError
          ? `Could not add the idea: ${error.message}`
          : 'Could not add the idea.',
      );
    }
  }
}

new App().start();
