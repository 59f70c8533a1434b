// End-to-end: spawn the real engine server, zoom from the seed into C<?>,
// and verify the level-1 window renders the six C-headed nodes within the
// latency budget.  Skipped when the engine CLI is not on PATH.

import { spawn, spawnSync } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import type { GraphPayload } from "../src/apitypes.js";
import { comparableSet } from "../src/reach.js";
import { renderGraphSvg } from "../src/view.js";

const PORT = 8873;
const BASE = `http://127.0.0.1:${PORT}`;
const haveCli = spawnSync("fractal", ["--help"], { stdio: "ignore" }).status !== null;

describe.skipIf(!haveCli)("against a live server", () => {
  let server: ReturnType<typeof spawn>;

  beforeAll(async () => {
    const dir = mkdtempSync(join(tmpdir(), "fractal-ui-"));
    const skeleton = join(dir, "one.cls");
    writeFileSync(skeleton, "class C<T> extends Object {}\n");
    server = spawn("fractal", ["serve", "--in", skeleton, "--port", String(PORT)],
                   { stdio: "ignore" });
    const deadline = Date.now() + 20_000;
    for (;;) {
      try {
        const resp = await fetch(`${BASE}/api/skeleton`);
        if (resp.ok) return;
      } catch {
        // not up yet
      }
      if (Date.now() > deadline) throw new Error("server did not come up");
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }, 30_000);

  afterAll(() => {
    server?.kill();
  });

  it("zooms from the seed into C<?> under the latency budget", async () => {
    const started = performance.now();
    const resp = await fetch(`${BASE}/api/graph?level=1&mode=intervals`);
    const graph = (await resp.json()) as GraphPayload;
    const visible = comparableSet(graph.edges, "C<?>");
    const svg = renderGraphSvg(graph, { visible });
    const elapsed = performance.now() - started;

    expect(elapsed).toBeLessThan(2000);
    const cHeaded = [...visible].filter((id) => id.startsWith("C<"));
    expect(cHeaded).toHaveLength(6);
    expect(visible.size).toBe(8); // the six C-nodes framed by Object and Null
    expect([...svg.matchAll(/<g class="node/g)]).toHaveLength(8);
  }, 15_000);

  it("zoom-out returns a subset of the deeper view", async () => {
    const low = (await (await fetch(`${BASE}/api/graph?level=0`)).json()) as GraphPayload;
    const high = (await (await fetch(`${BASE}/api/graph?level=1`)).json()) as GraphPayload;
    const highIds = new Set(high.nodes.map((n) => n.id));
    for (const node of low.nodes) {
      expect(highIds.has(node.id)).toBe(true);
    }
  }, 15_000);

  it("surfaces the embedding sets used for highlighting", async () => {
    const resp = await fetch(`${BASE}/api/embeddings?level=0&class=C&kind=copy`);
    const body = await resp.json();
    expect(body.verified).toBe(true);
    expect(body.mapping).toHaveLength(3);
  }, 15_000);
});
