// Browser shell: owns the view state, talks to the explorer API, and
// re-renders on every transition.  Stale responses are discarded by
// version-stamping each refresh.

import type { EmbeddingsPayload, GraphPayload, TransformKind, ViewState } from "./apitypes.js";
import { initialViewState } from "./apitypes.js";
import { ApiError, Client } from "./client.js";
import { comparableSet } from "./reach.js";
import { renderBanner, renderGraphSvg, renderVerdict } from "./view.js";

const KINDS: TransformKind[] = ["copy", "flip", "flatten"];

class App {
  private state: ViewState = initialViewState();
  private client = new Client();

  constructor(private readonly root: Document) {}

  start(): void {
    this.bind("zoom-out", () => this.zoomOut());
    this.bind("level-up", () => this.transition({ level: this.state.level + 1 }));
    this.bind("clear-window", () =>
      this.transition({ window: { low: null, high: null }, focus: null }));
    this.bind("load-skeleton", () => void this.loadSkeleton());
    this.bind("query-run", () => void this.runQuery());
    this.bind("highlight-off", () => this.transition({ highlight: null }));
    for (const kind of KINDS) {
      this.bind(`highlight-${kind}`, () => this.toggleHighlight(kind));
    }
    const mode = this.element<HTMLSelectElement>("mode");
    mode.addEventListener("change", () =>
      this.transition({ mode: mode.value as ViewState["mode"], focus: null }));
    this.element("graph").addEventListener("click", (event) => this.onGraphClick(event));
    this.bind("zoom-into", () => this.zoomIntoSelection());
    this.bind("bound-lower", () => this.setBound("low"));
    this.bind("bound-upper", () => this.setBound("high"));
    void this.refresh();
  }

  private bind(id: string, handler: () => void): void {
    this.element(id).addEventListener("click", handler);
  }

  private element<T extends HTMLElement = HTMLElement>(id: string): T {
    const found = this.root.getElementById(id);
    if (!found) throw new Error(`missing element #${id}`);
    return found as T;
  }

  private transition(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch, version: this.state.version + 1 };
    void this.refresh();
  }

  private zoomOut(): void {
    if (this.state.level === 0) return;
    this.transition({ level: this.state.level - 1, focus: null, selection: null });
  }

  private zoomIntoSelection(): void {
    if (!this.state.selection) return;
    this.transition({ level: this.state.level + 1, focus: this.state.selection });
  }

  private setBound(side: "low" | "high"): void {
    if (!this.state.selection) return;
    this.transition({
      window: { ...this.state.window, [side]: this.state.selection },
      focus: null,
    });
  }

  private toggleHighlight(kind: TransformKind): void {
    const cls = this.element<HTMLInputElement>("highlight-class").value.trim();
    const hole = Number(this.element<HTMLInputElement>("highlight-hole").value) || 0;
    if (!cls || this.state.level === 0) return;
    const current = this.state.highlight;
    if (current && current.kind === kind && current.cls === cls && current.hole === hole) {
      this.transition({ highlight: null });
    } else {
      this.transition({ highlight: { cls, hole, kind } });
    }
  }

  private onGraphClick(event: Event): void {
    const target = event.target as Element | null;
    const group = target?.closest("[data-id]");
    if (!group) return;
    const id = group.getAttribute("data-id");
    this.transition({ selection: id });
  }

  private async loadSkeleton(): Promise<void> {
    const source = this.element<HTMLTextAreaElement>("skeleton-source").value;
    try {
      await this.client.loadSkeleton(source);
      this.state = { ...initialViewState(), version: this.state.version + 1 };
      await this.refresh();
    } catch (error) {
      this.showBanner(error);
    }
  }

  private async runQuery(): Promise<void> {
    const lhs = this.element<HTMLInputElement>("query-lhs").value;
    const rhs = this.element<HTMLInputElement>("query-rhs").value;
    try {
      const verdict = await this.client.subtype(lhs, rhs);
      this.element("query-result").innerHTML = renderVerdict(verdict);
    } catch (error) {
      this.element("query-result").innerHTML =
        renderBanner(error instanceof Error ? error.message : String(error));
    }
  }

  private async refresh(): Promise<void> {
    const requested = this.state.version;
    const { level, mode, window, focus, highlight, selection } = this.state;
    try {
      const graph = await this.client.graph(level, mode, window.low, window.high);
      let embeddings: EmbeddingsPayload | null = null;
      if (highlight && level > 0) {
        embeddings = await this.client.embeddings(
          level - 1, highlight.cls, highlight.hole, highlight.kind, mode);
      }
      if (this.state.version !== requested) return; // stale
      this.render(graph, embeddings, focus, selection);
    } catch (error) {
      if (this.state.version !== requested) return;
      this.showBanner(error);
    }
  }

  private render(graph: GraphPayload, embeddings: EmbeddingsPayload | null,
                 focus: string | null, selection: string | null): void {
    const visible = focus ? comparableSet(graph.edges, focus) : undefined;
    this.element("graph").innerHTML = renderGraphSvg(graph, {
      visible,
      highlight: embeddings,
      selection,
    });
    const shown = visible ? visible.size : graph.nodes.length;
    this.element("status").textContent =
      `level ${graph.level} (${graph.mode}): ${shown} of ${graph.nodes.length} nodes shown`;
    this.element("banner").innerHTML = "";
    const actions = this.element("selection-actions");
    actions.style.display = selection ? "block" : "none";
    if (selection) {
      this.element("selection-label").textContent = selection;
    }
  }

  private showBanner(error: unknown): void {
    const message = error instanceof ApiError
      ? `${error.status}: ${error.message}`
      : error instanceof Error ? error.message : String(error);
    this.element("banner").innerHTML = renderBanner(message);
  }
}

if (typeof document !== "undefined") {
  new App(document).start();
}
