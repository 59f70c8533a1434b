"""Finite poset graphs over canonical type terms.

A SubtypingGraph stores its node list (sorted by canonical java rendering,
so every serialization is byte-stable) and a boolean relation matrix
``rel[i, j] == nodes[i] R nodes[j]``.  Constructed level graphs store the
full reflexive-transitive subtype relation; :func:`transitive_reduction`
derives the Hasse cover relation, which is the convention for all edge
counts.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import GraphError
from .subtyping import is_subtype
from .types import App, INTERVAL, JAVA, SHORT, TypeTerm, canonical_key, expressible, rank, render

if TYPE_CHECKING:
    from .skeleton import ClassTable

MODE_INTERVALS = "intervals"
MODE_WILDCARDS = "wildcards"


class SubtypingGraph:
    def __init__(self, table: "ClassTable", nodes: Sequence[TypeTerm], rel: np.ndarray,
                 level: int = 0, mode: str = MODE_INTERVALS):
        n = len(nodes)
        if rel.shape != (n, n):
            raise GraphError(f"relation shape {rel.shape} does not match {n} nodes")
        self.table = table
        self.nodes = tuple(nodes)
        self.rel = rel.astype(bool)
        self.rel.setflags(write=False)
        self.level = level
        self.mode = mode

    def __len__(self) -> int:
        return len(self.nodes)

    def __repr__(self) -> str:
        return f"<SubtypingGraph level={self.level} mode={self.mode} nodes={len(self.nodes)}>"

    @cached_property
    def closed(self) -> np.ndarray:
        """Reflexive-transitive closure of the stored relation."""
        return closure_by_matrix(self.rel)

    @cached_property
    def covers(self) -> np.ndarray:
        """covers[i, j] iff j covers i (i < j with nothing in between)."""
        return _covers_of(self.closed)

    @cached_property
    def index(self) -> dict[TypeTerm, int]:
        return {t: i for i, t in enumerate(self.nodes)}

    def leq(self, s: TypeTerm, t: TypeTerm) -> bool:
        """Order between two member nodes, as recorded in the graph."""
        return bool(self.closed[self.index[s], self.index[t]])

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Cover edges as (supertype index, subtype index), sorted."""
        subs, sups = np.nonzero(self.covers)
        return sorted(zip(sups.tolist(), subs.tolist()))

    def edge_count(self) -> int:
        return int(self.covers.sum())

    def with_relation(self, rel: np.ndarray, level: int | None = None) -> "SubtypingGraph":
        return SubtypingGraph(self.table, self.nodes, rel,
                              self.level if level is None else level, self.mode)


def build_graph(table: "ClassTable", terms: Iterable[TypeTerm],
                level: int = 0, mode: str = MODE_INTERVALS) -> SubtypingGraph:
    """Sort the terms canonically and compute their full subtype relation."""
    nodes = sorted(set(terms), key=lambda t: canonical_key(table, t))
    n = len(nodes)
    rel = np.zeros((n, n), dtype=bool)
    for i, s in enumerate(nodes):
        for j, t in enumerate(nodes):
            rel[i, j] = is_subtype(table, s, t)
    return SubtypingGraph(table, nodes, rel, level, mode)


# --------------------------------------------------------------------------
# Matrix path

def adjacency_matrix(g: SubtypingGraph) -> np.ndarray:
    """The stored relation as a fresh writable boolean matrix."""
    return g.rel.copy()


def closure_by_matrix(m: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure over the boolean semiring.

    Iterates M <- M | M.M starting from I | A until the fixpoint; the
    number of rounds is logarithmic in the longest path.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise GraphError(f"matrix is not square: {m.shape}")
    closed = m.astype(bool) | np.eye(m.shape[0], dtype=bool)
    while True:
        nxt = closed | (closed @ closed)
        if np.array_equal(nxt, closed):
            return closed
        closed = nxt


def _covers_of(closed: np.ndarray) -> np.ndarray:
    strict = closed & ~np.eye(closed.shape[0], dtype=bool)
    if (strict & strict.T).any():
        raise GraphError("relation contains a cycle; not a partial order")
    return strict & ~(strict @ strict)


def transitive_closure(g: SubtypingGraph) -> SubtypingGraph:
    return g.with_relation(g.closed)


def transitive_reduction(g: SubtypingGraph) -> SubtypingGraph:
    """The Hasse diagram: the unique minimal relation with the same closure."""
    return g.with_relation(g.covers)


# --------------------------------------------------------------------------
# Census and paths

@dataclass(frozen=True)
class Census:
    """counts[d] = ordered comparable pairs whose longest cover path is d."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def _longest_distances(g: SubtypingGraph) -> np.ndarray:
    """D[x, y] = longest cover-path length from y down to x; -1 if x !<= y."""
    closed = g.closed
    covers = g.covers
    n = len(g.nodes)
    dist = np.full((n, n), -1, dtype=np.int32)
    order = np.argsort(closed.sum(axis=0), kind="stable")  # fewer elements below first
    for y in order:
        dist[y, y] = 0
        for c in np.flatnonzero(covers[:, y]):
            below = closed[:, c]
            dist[below, y] = np.maximum(dist[below, y], dist[below, c] + 1)
    return dist


def census_by_distance(g: SubtypingGraph) -> Census:
    if not g.nodes:
        return Census(())
    dist = _longest_distances(g)
    top = int(dist.max())
    counts = tuple(int((dist == d).sum()) for d in range(top + 1))
    return Census(counts)


def longest_path(g: SubtypingGraph) -> int:
    if not g.nodes:
        return 0
    return int(_longest_distances(g).max())


def node_depths(g: SubtypingGraph) -> list[int]:
    """Layer of each node in a top-down drawing: its longest path from above."""
    dist = _longest_distances(g)
    return [int(dist[x, :].max()) for x in range(len(g.nodes))]


# --------------------------------------------------------------------------
# Quotient, window, equality

def quotient_by_head(g: SubtypingGraph) -> SubtypingGraph:
    """Collapse all applications of one class to its default application.

    Ground nodes persist.  This is the zoom-out view: for any constructed
    level the quotient is the level-0 graph again.
    """
    table = g.table
    reps = [table.default_application(t.cls) if isinstance(t, App) else t for t in g.nodes]
    new_nodes = sorted(set(reps), key=lambda t: canonical_key(table, t))
    pos = {t: i for i, t in enumerate(new_nodes)}
    members: list[list[int]] = [[] for _ in new_nodes]
    for i, r in enumerate(reps):
        members[pos[r]].append(i)
    k = len(new_nodes)
    rel = np.zeros((k, k), dtype=bool)
    closed = g.closed
    for a in range(k):
        for b in range(k):
            rel[a, b] = bool(closed[np.ix_(members[a], members[b])].any())
    closed_q = closure_by_matrix(rel)
    _covers_of(closed_q)  # raises if the induced relation is not a partial order
    return SubtypingGraph(g.table, new_nodes, closed_q, g.level, g.mode)


def window(g: SubtypingGraph, low: TypeTerm, high: TypeTerm) -> SubtypingGraph:
    """Induced sub-poset on the nodes between low and high, inclusive."""
    if not is_subtype(g.table, low, high):
        raise GraphError(
            f"inverted window: {render(g.table, low)} is not a subtype of {render(g.table, high)}")
    keep = [i for i, t in enumerate(g.nodes)
            if is_subtype(g.table, low, t) and is_subtype(g.table, t, high)]
    sub = g.closed[np.ix_(keep, keep)]
    return SubtypingGraph(g.table, [g.nodes[i] for i in keep], sub, g.level, g.mode)


def graph_equal(g1: SubtypingGraph, g2: SubtypingGraph) -> bool:
    """Same canonical node set and same order; level/mode tags are ignored."""
    return g1.nodes == g2.nodes and np.array_equal(g1.closed, g2.closed)


# --------------------------------------------------------------------------
# Export

def node_payload(g: SubtypingGraph) -> list[dict]:
    table = g.table
    return [
        {
            "id": render(table, t, JAVA),
            "render_java": render(table, t, JAVA),
            "render_short": render(table, t, SHORT),
            "render_interval": render(table, t, INTERVAL),
            "rank": rank(table, t),
            "expressible": expressible(table, t),
        }
        for t in g.nodes
    ]


def json_payload(g: SubtypingGraph) -> dict:
    names = [render(g.table, t, JAVA) for t in g.nodes]
    return {
        "nodes": node_payload(g),
        "edges": [[names[sup], names[sub]] for sup, sub in g.hasse_edges()],
        "level": g.level,
        "mode": g.mode,
    }


def export(g: SubtypingGraph, format: str) -> bytes:
    """Serialize deterministically; edges run supertype -> subtype."""
    if format == "dot":
        return _export_dot(g)
    if format == "json":
        text = json.dumps(json_payload(g), indent=2) + "\n"
        return text.encode()
    if format == "matrix-csv":
        return _export_matrix_csv(g)
    raise GraphError(f"unknown export format {format!r}")


def _export_dot(g: SubtypingGraph) -> bytes:
    table = g.table
    names = [render(table, t, JAVA) for t in g.nodes]
    solid = [expressible(table, t) for t in g.nodes]
    lines = ["digraph subtyping {"]
    for name, ok in zip(names, solid):
        lines.append(f'  "{name}";' if ok else f'  "{name}" [style=dotted];')
    for sup, sub in g.hasse_edges():
        style = "" if solid[sup] and solid[sub] else " [style=dotted]"
        lines.append(f'  "{names[sup]}" -> "{names[sub]}"{style};')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def _export_matrix_csv(g: SubtypingGraph) -> bytes:
    """Header of node names, then 0/1 rows of the supertype->subtype cover matrix."""
    names = [render(g.table, t, JAVA) for t in g.nodes]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(names)
    down = g.covers.T  # down[i, j]: i covers j
    for row in down.astype(int).tolist():
        writer.writerow(row)
    return out.getvalue().encode()


__all__ = [
    "Census", "SubtypingGraph", "MODE_INTERVALS", "MODE_WILDCARDS",
    "adjacency_matrix", "build_graph", "census_by_distance", "closure_by_matrix",
    "export", "graph_equal", "json_payload", "longest_path", "node_payload",
    "quotient_by_head", "transitive_closure", "transitive_reduction", "window",
]
