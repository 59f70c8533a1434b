import type { Edge, GraphPayload } from "./apitypes.js";

export interface PlacedNode {
  id: string;
  x: number;
  y: number;
  layer: number;
}

export interface Layout {
  placed: PlacedNode[];
  rows: number;
  columns: number;
}

/**
 * Layered top-down placement: a node's layer is its longest edge path from
 * the visible top (so the top type sits on row 0 and the bottom type on the
 * last row), and nodes within a layer keep the server's canonical order.
 */
export function layeredLayout(graph: GraphPayload, visible?: Set<string>): Layout {
  const ids = graph.nodes.map((n) => n.id).filter((id) => !visible || visible.has(id));
  const present = new Set(ids);
  const incoming = new Map<string, string[]>();
  for (const [sup, sub] of graph.edges) {
    if (present.has(sup) && present.has(sub)) {
      const entry = incoming.get(sub);
      if (entry) {
        entry.push(sup);
      } else {
        incoming.set(sub, [sup]);
      }
    }
  }
  const depth = new Map<string, number>();
  const inProgress = new Set<string>();
  const layerOf = (id: string): number => {
    const known = depth.get(id);
    if (known !== undefined) return known;
    if (inProgress.has(id)) return 0; // cycles cannot happen in cover edges
    inProgress.add(id);
    let best = 0;
    for (const parent of incoming.get(id) ?? []) {
      best = Math.max(best, layerOf(parent) + 1);
    }
    inProgress.delete(id);
    depth.set(id, best);
    return best;
  };

  const layers = new Map<number, string[]>();
  for (const id of ids) {
    const layer = layerOf(id);
    const row = layers.get(layer);
    if (row) {
      row.push(id);
    } else {
      layers.set(layer, [id]);
    }
  }
  const rows = layers.size === 0 ? 0 : Math.max(...layers.keys()) + 1;
  const columns = Math.max(1, ...[...layers.values()].map((row) => row.length));
  const placed: PlacedNode[] = [];
  for (const [layer, row] of layers) {
    row.forEach((id, index) => {
      placed.push({
        id,
        layer,
        x: index - (row.length - 1) / 2,
        y: layer,
      });
    });
  }
  placed.sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0));
  return { placed, rows, columns };
}

export function visibleEdges(edges: Edge[], visible?: Set<string>): Edge[] {
  if (!visible) return edges;
  return edges.filter(([sup, sub]) => visible.has(sup) && visible.has(sub));
}
