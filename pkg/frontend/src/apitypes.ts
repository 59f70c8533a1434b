// Payload shapes of the explorer API and the client-side view state.

export interface NodePayload {
  id: string;
  render_java: string;
  render_short: string;
  render_interval: string;
  rank: number;
  expressible: boolean;
}

export type Edge = [string, string]; // supertype -> subtype

export interface GraphPayload {
  nodes: NodePayload[];
  edges: Edge[];
  level: number;
  mode: string;
}

export type TransformKind = "copy" | "flip" | "flatten";

export interface EmbeddingsPayload {
  class: string;
  hole: number;
  kind: TransformKind;
  level: number;
  verified: boolean;
  mapping: [string, string][]; // [source node id, image node id]
  pruned: string[];
}

export interface Renderings {
  java: string;
  short: string;
  interval: string;
}

export interface SubtypePayload {
  result: boolean;
  lhs: Renderings;
  rhs: Renderings;
}

export interface CensusPayload {
  level: number;
  mode: string;
  counts: number[];
  total: number;
}

export interface SkeletonPayload {
  source: string;
  classes: string[];
}

export interface Highlight {
  cls: string;
  hole: number;
  kind: TransformKind;
}

export interface ViewState {
  level: number;
  mode: "intervals" | "wildcards";
  window: { low: string | null; high: string | null };
  highlight: Highlight | null;
  // when set, the view is filtered to the nodes comparable to this node
  // (its down-set and up-set, computed from server-provided edges)
  focus: string | null;
  selection: string | null;
  version: number;
}

export function initialViewState(): ViewState {
  return {
    level: 0,
    mode: "intervals",
    window: { low: null, high: null },
    highlight: null,
    focus: null,
    selection: null,
    version: 0,
  };
}
