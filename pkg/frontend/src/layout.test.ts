import { describe, expect, it } from 'vitest';

import { LayoutStore } from './layout.js';
import type { StorageLike } from './layout.js';

function memoryStorage(): StorageLike & { data: Map<string, string> } {
  const data = new Map<string, string>();
  return {
    data,
    getItem: (key) => data.get(key) ?? null,
    setItem: (key, value) => {
      data.set(key, value);
    },
    removeItem: (key) => {
      data.delete(key);
    },
  };
}

describe('LayoutStore', () => {
  it('persists positions under a session-scoped key', () => {
    const storage = memoryStorage();
    const store = new LayoutStore('s1', storage);
    store.set('n1', { x: 12.4, y: 99.6 });

    expect(store.get('n1')).toEqual({ x: 12, y: 100 });
    expect([...storage.data.keys()]).toEqual(['blocktutor.layout.s1']);

    const reloaded = new LayoutStore('s1', storage);
    expect(reloaded.get('n1')).toEqual({ x: 12, y: 100 });
  });

  it('keeps sessions isolated', () => {
    const storage = memoryStorage();
    const a = new LayoutStore('a', storage);
    a.set('n1', { x: 1, y: 2 });
    const b = new LayoutStore('b', storage);
    expect(b.get('n1')).toBeUndefined();
  });

  it('survives corrupt stored payloads', () => {
    const storage = memoryStorage();
    storage.setItem('blocktutor.layout.s1', '{not json');
    const store = new LayoutStore('s1', storage);
    expect(store.get('anything')).toBeUndefined();

    storage.setItem('blocktutor.layout.s2', '"a string"');
    const store2 = new LayoutStore('s2', storage);
    expect(store2.get('anything')).toBeUndefined();
  });

  it('removes and clears positions', () => {
    const storage = memoryStorage();
    const store = new LayoutStore('s1', storage);
    store.set('n1', { x: 1, y: 1 });
    store.set('n2', { x: 2, y: 2 });
    store.remove('n1');
    expect(store.get('n1')).toBeUndefined();
    expect(store.get('n2')).toBeDefined();
    store.clear();
    expect(store.get('n2')).toBeUndefined();
    expect(storage.data.size).toBe(0);
  });

  it('places unplaced nodes on a deterministic grid and persists it', () => {
    const storage = memoryStorage();
    const store = new LayoutStore('s1', storage);
    expect(store.place('n0', 0)).toEqual({ x: 60, y: 60 });
    expect(store.place('n1', 1)).toEqual({ x: 230, y: 60 });
    expect(store.place('n4', 4)).toEqual({ x: 60, y: 170 });
    // Once placed, the stored position wins over the grid slot.
    expect(store.place('n0', 7)).toEqual({ x: 60, y: 60 });
  });
});
