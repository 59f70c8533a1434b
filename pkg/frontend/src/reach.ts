import type { Edge } from "./apitypes.js";

/**
 * The set of nodes comparable to `id`: everything reachable downward plus
 * everything reachable upward along the server's cover edges, and the node
 * itself.  This is the zoom window of a node; it is computed purely from
 * edges the server returned, never from client-side subtyping.
 */
export function comparableSet(edges: Edge[], id: string): Set<string> {
  const down = new Map<string, string[]>();
  const up = new Map<string, string[]>();
  for (const [sup, sub] of edges) {
    push(down, sup, sub);
    push(up, sub, sup);
  }
  const seen = new Set<string>([id]);
  for (const adjacency of [down, up]) {
    const queue = [id];
    const visited = new Set<string>([id]);
    while (queue.length > 0) {
      const current = queue.pop()!;
      for (const next of adjacency.get(current) ?? []) {
        if (!visited.has(next)) {
          visited.add(next);
          seen.add(next);
          queue.push(next);
        }
      }
    }
  }
  return seen;
}

function push(map: Map<string, string[]>, key: string, value: string): void {
  const entry = map.get(key);
  if (entry) {
    entry.push(value);
  } else {
    map.set(key, [value]);
  }
}
