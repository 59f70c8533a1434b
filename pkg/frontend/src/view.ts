import type { EmbeddingsPayload, GraphPayload, SubtypePayload } from "./apitypes.js";
import { layeredLayout, visibleEdges } from "./layout.js";

const CELL_W = 170;
const ROW_H = 82;
const MARGIN = 60;
const NODE_W = 150;
const NODE_H = 30;

const HIGHLIGHT_FILL: Record<string, string> = {
  copy: "#d8f5d8",
  flip: "#f8d7d7",
  flatten: "#e8e8e8",
};
const HIGHLIGHT_STROKE: Record<string, string> = {
  copy: "#1d8a1d",
  flip: "#c22727",
  flatten: "#777777",
};

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function imageSet(embedding: EmbeddingsPayload): Set<string> {
  return new Set(embedding.mapping.map(([, image]) => image));
}

export interface RenderOptions {
  visible?: Set<string>;
  highlight?: EmbeddingsPayload | null;
  selection?: string | null;
}

/**
 * Draw a level as layered SVG: the top type on the first row, the bottom
 * type on the last, inexpressible nodes and their edges dotted, and the
 * embedding image set tinted by transformation kind.
 */
export function renderGraphSvg(graph: GraphPayload, options: RenderOptions = {}): string {
  const { visible, highlight = null, selection = null } = options;
  const layout = layeredLayout(graph, visible);
  const byId = new Map(graph.nodes.map((n) => [n.id, n]));
  const position = new Map(layout.placed.map((p) => [p.id, p]));
  const width = layout.columns * CELL_W + 2 * MARGIN;
  const height = Math.max(1, layout.rows) * ROW_H + 2 * MARGIN - ROW_H / 2;
  const highlighted = highlight && highlight.verified !== undefined ? imageSet(highlight) : new Set<string>();
  const kind = highlight?.kind ?? "";

  const px = (x: number) => width / 2 + x * CELL_W;
  const py = (y: number) => MARGIN + y * ROW_H;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `class="fractal-graph" data-level="${graph.level}" data-mode="${escapeXml(graph.mode)}">`,
  );
  for (const [sup, sub] of visibleEdges(graph.edges, visible)) {
    const a = position.get(sup);
    const b = position.get(sub);
    if (!a || !b) continue;
    const dotted = !(byId.get(sup)?.expressible && byId.get(sub)?.expressible);
    const colored = highlighted.has(sup) && highlighted.has(sub);
    const stroke = colored ? HIGHLIGHT_STROKE[kind] ?? "#999" : "#999";
    parts.push(
      `<line class="edge${dotted ? " inexpressible" : ""}${colored ? ` hl-${kind}` : ""}" ` +
        `x1="${px(a.x)}" y1="${py(a.y) + NODE_H / 2}" x2="${px(b.x)}" y2="${py(b.y) - NODE_H / 2}" ` +
        `stroke="${stroke}" stroke-width="${colored ? 2 : 1}"${dotted ? ' stroke-dasharray="4 3"' : ""}/>`,
    );
  }
  for (const placed of layout.placed) {
    const node = byId.get(placed.id);
    if (!node) continue;
    const tinted = highlighted.has(node.id);
    const classes = ["node"];
    if (!node.expressible) classes.push("inexpressible");
    if (tinted) classes.push(`hl-${kind}`);
    if (selection === node.id) classes.push("selected");
    const fill = tinted ? HIGHLIGHT_FILL[kind] ?? "#fff" : "#fff";
    const stroke = selection === node.id ? "#0055cc" : tinted ? HIGHLIGHT_STROKE[kind] ?? "#333" : "#333";
    const x = px(placed.x);
    const y = py(placed.y);
    parts.push(
      `<g class="${classes.join(" ")}" data-id="${escapeXml(node.id)}" data-rank="${node.rank}">` +
        `<rect x="${x - NODE_W / 2}" y="${y - NODE_H / 2}" width="${NODE_W}" height="${NODE_H}" rx="6" ` +
        `fill="${fill}" stroke="${stroke}" stroke-width="${selection === node.id ? 2.5 : 1.2}"` +
        `${node.expressible ? "" : ' stroke-dasharray="5 3"'}/>` +
        `<title>${escapeXml(node.render_java)}
${escapeXml(node.render_short)}
` +
        `${escapeXml(node.render_interval)}
rank ${node.rank}</title>` +
        `<text x="${x}" y="${y + 4}" text-anchor="middle" font-size="12">${escapeXml(clip(node.render_java))}</text>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

function clip(label: string): string {
  return label.length > 24 ? `${label.slice(0, 21)}…` : label;
}

export function renderVerdict(payload: SubtypePayload): string {
  const verdict = payload.result ? "true" : "false";
  return (
    `<div class="verdict ${verdict}">` +
    `<strong>${verdict}</strong>: ` +
    `<code>${escapeXml(payload.lhs.java)}</code> &lt;: <code>${escapeXml(payload.rhs.java)}</code>` +
    `<div class="detail">as intervals: <code>${escapeXml(payload.lhs.interval)}</code> vs ` +
    `<code>${escapeXml(payload.rhs.interval)}</code></div></div>`
  );
}

export function renderBanner(message: string): string {
  return `<div class="banner error">${escapeXml(message)}</div>`;
}
