// Node positions live only in the browser; the server never sees layout.

export interface Point {
  x: number;
  y: number;
}

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

const KEY_PREFIX = 'blocktutor.layout.';

export class LayoutStore {
  private readonly storage: StorageLike;
  private readonly key: string;
  private positions: Record<string, Point>;

  constructor(sessionId: string, storage?: StorageLike) {
    this.storage = storage ?? window.localStorage;
    this.key = `${KEY_PREFIX}${sessionId}`;
    this.positions = this.load();
  }

  private load(): Record<string, Point> {
    const raw = this.storage.getItem(this.key);
    if (!raw) {
      return {};
    }
    try {
      const parsed = JSON.parse(raw);
      return typeof parsed === 'object' && parsed !== null ? parsed : {};
    } catch {
      return {};
    }
  }

  get(nodeId: string): Point | undefined {
    return this.positions[nodeId];
  }

  set(nodeId: string, point: Point): void {
    this.positions[nodeId] = { x: Math.round(point.x), y: Math.round(point.y) };
    this.storage.setItem(this.key, JSON.stringify(this.positions));
  }

  remove(nodeId: string): void {
    delete this.positions[nodeId];
    this.storage.setItem(this.key, JSON.stringify(this.positions));
  }

  clear(): void {
    this.positions = {};
    this.storage.removeItem(this.key);
  }

  /** Deterministic fallback position for nodes placed by code (remix
   * adoption, initial load): a simple grid walk per canvas. */
  place(nodeId: string, index: number): Point {
    const existing = this.get(nodeId);
    if (existing) {
      return existing;
    }
    const point = {
      x: 60 + (index % 4) * 170,
      y: 60 + Math.floor(index / 4) * 110,
    };
    this.set(nodeId, point);
    return point;
  }
}
