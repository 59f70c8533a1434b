import { describe, expect, it } from "vitest";

import { comparableSet } from "../src/reach.js";
import { graph1 } from "./fixtures.js";

describe("comparableSet", () => {
  it("collects the down-set and up-set of the default application", () => {
    // C<?> sits directly under Object and above every other C-node, so its
    // comparable set is the whole level
    const got = comparableSet(graph1.edges, "C<?>");
    expect(got).toEqual(new Set(graph1.nodes.map((n) => n.id)));
  });

  it("keeps incomparable siblings out", () => {
    const got = comparableSet(graph1.edges, "C<Null>");
    expect(got.has("C<Object>")).toBe(false);
    expect(got.has("C<? super C<?>>")).toBe(false);
    expect(got).toEqual(new Set(["C<Null>", "Null", "C<? extends C<?>>", "C<?>", "Object"]));
  });

  it("always contains the focus node itself", () => {
    for (const node of graph1.nodes) {
      expect(comparableSet(graph1.edges, node.id).has(node.id)).toBe(true);
    }
  });

  it("is symmetric: y comparable to x iff x comparable to y", () => {
    for (const a of graph1.nodes) {
      for (const b of graph1.nodes) {
        const fromA = comparableSet(graph1.edges, a.id).has(b.id);
        const fromB = comparableSet(graph1.edges, b.id).has(a.id);
        expect(fromA).toBe(fromB);
      }
    }
  });
});
