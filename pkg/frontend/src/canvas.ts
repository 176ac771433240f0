// Graph canvas rendering: absolutely positioned node cards over an SVG
// edge layer, with drag-to-move and click-click connecting.

import type { EditorGraph } from './graph.js';
import { connect, nodesOnCanvas, removeNode } from './graph.js';
import type { LayoutStore } from './layout.js';
import type { GraphNode } from './types.js';

const KIND_CLASS: Record<string, string> = {
  Character: 'node-character',
  Behavior: 'node-behavior',
  Result: 'node-result',
  Condition: 'node-condition',
  Boolean: 'node-boolean',
  Loop: 'node-loop',
  Variable: 'node-variable',
};

export interface CanvasCallbacks {
  onChange: () => void;
  onStatus: (message: string) => void;
}

export class GraphCanvas {
  private readonly root: HTMLElement;
  private readonly svg: SVGSVGElement;
  private readonly graph: EditorGraph;
  private readonly layout: LayoutStore;
  private readonly callbacks: CanvasCallbacks;
  private canvasId: string;
  private connectFrom: string | null = null;
  private highlighted = new Set<string>();

  constructor(
    root: HTMLElement,
    graph: EditorGraph,
    layout: LayoutStore,
    canvasId: string,
    callbacks: CanvasCallbacks,
  ) {
    this.root = root;
    this.graph = graph;
    this.layout = layout;
    this.canvasId = canvasId;
    this.callbacks = callbacks;
    this.root.classList.add('graph-canvas');
    this.svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
    this.svg.classList.add('edge-layer');
    this.root.appendChild(this.svg);
  }

  showCanvas(canvasId: string): void {
    this.canvasId = canvasId;
    this.connectFrom = null;
    this.render();
  }

  setHighlight(nodeIds: string[]): void {
    this.highlighted = new Set(nodeIds);
    this.render();
  }

  render(): void {
    for (const card of [...this.root.querySelectorAll('.node-card')]) {
      card.remove();
    }
    const nodes = nodesOnCanvas(this.graph, this.canvasId);
    nodes.forEach((node, index) => {
      this.root.appendChild(this.nodeCard(node, index));
    });
    this.renderEdges(nodes);
  }

  private renderEdges(nodes: GraphNode[]): void {
    this.svg.innerHTML = '';
    const visible = new Set(nodes.map((n) => n.id));
    for (const edge of this.graph.edges.values()) {
      if (!visible.has(edge.from) || !visible.has(edge.to)) {
        continue;
      }
      const a = this.layout.get(edge.from);
      const b = this.layout.get(edge.to);
      if (!a || !b) {
        continue;
      }
      const line = document.createElementNS(
        'http://www.w3.org/2000/svg',
        'line',
      );
      line.setAttribute('x1', String(a.x + 70));
      line.setAttribute('y1', String(a.y + 30));
      line.setAttribute('x2', String(b.x + 70));
      line.setAttribute('y2', String(b.y + 30));
      line.setAttribute('class', `edge edge-${edge.relation}`);
      this.svg.appendChild(line);
      const label = document.createElementNS(
        'http://www.w3.org/2000/svg',
        'text',
      );
      label.setAttribute('x', String((a.x + b.x) / 2 + 70));
      label.setAttribute('y', String((a.y + b.y) / 2 + 24));
      label.setAttribute('class', 'edge-label');
      label.textContent = edge.relation;
      this.svg.appendChild(label);
    }
  }

  private nodeCard(node: GraphNode, index: number): HTMLElement {
    const card = document.createElement('div');
    card.className = `node-card ${KIND_CLASS[node.kind] ?? ''}`;
    if (node.origin === 'remix-suggested') {
      card.classList.add('node-remix');
    }
    if (this.highlighted.has(node.id)) {
      card.classList.add('node-highlight');
    }
    if (this.connectFrom === node.id) {
      card.classList.add('node-connecting');
    }
    card.dataset.nodeId = node.id;
    const point = this.layout.place(node.id, index);
    card.style.left = `${point.x}px`;
    card.style.top = `${point.y}px`;

    const kind = document.createElement('span');
    kind.className = 'node-kind';
    kind.textContent = node.kind;
    const label = document.createElement('span');
    label.className = 'node-label';
    label.textContent = node.label;
    card.append(kind, label);

    const remove = document.createElement('button');
    remove.className = 'node-remove';
    remove.textContent = '×';
    remove.title = 'Remove node';
    remove.addEventListener('click', (event) => {
      event.stopPropagation();
      removeNode(this.graph, node.id);
      this.layout.remove(node.id);
      this.render();
      this.callbacks.onChange();
    });
    card.appendChild(remove);

    card.addEventListener('click', () => this.handleConnectClick(node.id));
    this.makeDraggable(card, node.id);
    return card;
  }

  private handleConnectClick(nodeId: string): void {
    if (this.connectFrom === null) {
      this.connectFrom = nodeId;
      this.callbacks.onStatus('Pick a node to connect to.');
      this.render();
      return;
    }
    if (this.connectFrom === nodeId) {
      this.connectFrom = null;
      this.render();
      return;
    }
    const result = connect(this.graph, this.connectFrom, nodeId);
    if (result.ok) {
      this.callbacks.onStatus(`Connected with "${result.edge.relation}".`);
      this.callbacks.onChange();
    } else {
      this.callbacks.onStatus(result.reason);
    }
    this.connectFrom = null;
    this.render();
  }

  private makeDraggable(card: HTMLElement, nodeId: string): void {
    let dragging = false;
    let moved = false;
    let offsetX = 0;
    let offsetY = 0;

    card.addEventListener('pointerdown', (event) => {
      dragging = true;
      moved = false;
      const rect = card.getBoundingClientRect();
      offsetX = event.clientX - rect.left;
      offsetY = event.clientY - rect.top;
      card.setPointerCapture(event.pointerId);
    });
    card.addEventListener('pointermove', (event) => {
      if (!dragging) {
        return;
      }
      moved = true;
      const host = this.root.getBoundingClientRect();
      const x = event.clientX - host.left - offsetX;
      const y = event.clientY - host.top - offsetY;
      card.style.left = `${x}px`;
      card.style.top = `${y}px`;
      this.layout.set(nodeId, { x, y });
      this.renderEdges(nodesOnCanvas(this.graph, this.canvasId));
    });
    card.addEventListener('pointerup', (event) => {
      dragging = false;
      card.releasePointerCapture(event.pointerId);
      if (moved) {
        // Swallow the click so a drag does not start a connection.
        const swallow = (clickEvent: Event) => clickEvent.stopPropagation();
        card.addEventListener('click', swallow, { capture: true, once: true });
      }
    });
  }
}
