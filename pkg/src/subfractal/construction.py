"""Iterated construction of the subtyping levels.

The seed graph fills every hole of every generic class with its declared
default interval.  Each next level substitutes, into every hole, either
all intervals over the previous level (intervals mode) or the three
wildcard forms of each previous-level node (wildcards mode), pruned to the
hole's declared bounds, and re-derives the order from the decision
procedure alone.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence, Union

from .errors import BudgetError, TypeTermError, UnknownClassError
from .graphs import (
    Census,
    MODE_INTERVALS,
    MODE_WILDCARDS,
    SubtypingGraph,
    build_graph,
    census_by_distance,
    graph_equal,
)
from .subtyping import interval_contains, is_subtype
from .types import App, DEFAULT_INTERVAL, Ground, Interval, NULL, OBJECT, TypeTerm, canonical_key

if TYPE_CHECKING:
    from .skeleton import ClassTable

COPY = "copy"
FLIP = "flip"
FLATTEN = "flatten"
KINDS = (COPY, FLIP, FLATTEN)

DEFAULT_MAX_NODES = 100_000
DEFAULT_MAX_LEVEL = 4


@dataclass(frozen=True)
class Budget:
    """Caps for one construction run; exceeding either is reported, not fatal."""

    max_nodes: int = DEFAULT_MAX_NODES
    max_level: int = DEFAULT_MAX_LEVEL

    @staticmethod
    def from_env(max_nodes: int | None = None) -> "Budget":
        """Explicit value wins, then FRACTAL_BUDGET, then the default."""
        if max_nodes is not None:
            return Budget(max_nodes=max_nodes)
        env = os.environ.get("FRACTAL_BUDGET")
        if env:
            try:
                return Budget(max_nodes=int(env))
            except ValueError:
                raise BudgetError(f"FRACTAL_BUDGET is not an integer: {env!r}",
                                  largest_level=-1) from None
        return Budget()


@dataclass(frozen=True)
class ArgumentSet:
    """A deduplicated, canonically sorted set of candidate argument intervals."""

    intervals: tuple[Interval, ...]
    provenance: str = ""

    def __len__(self) -> int:
        return len(self.intervals)


ArgsLike = Union[ArgumentSet, Sequence[Interval], Mapping[tuple[str, int], Iterable[Interval]]]


def _sorted_intervals(table: "ClassTable", ivs: Iterable[Interval]) -> tuple[Interval, ...]:
    return tuple(sorted(set(ivs),
                        key=lambda iv: (canonical_key(table, iv.lo), canonical_key(table, iv.hi))))


def intervals_over(table: "ClassTable", g: SubtypingGraph,
                   bound: Interval = DEFAULT_INTERVAL) -> ArgumentSet:
    """All comparable ordered pairs of g, as intervals, pruned to the bound."""
    closed = g.closed
    out = []
    for i, lo in enumerate(g.nodes):
        for j, hi in enumerate(g.nodes):
            if closed[i, j]:
                iv = Interval(lo, hi)
                if interval_contains(table, bound, iv):
                    out.append(iv)
    return ArgumentSet(_sorted_intervals(table, out), f"intervals-over-level({g.level})")


def wildcard_forms_over(table: "ClassTable", g: SubtypingGraph,
                        bound: Interval = DEFAULT_INTERVAL) -> ArgumentSet:
    """The covariant, contravariant and invariant forms of each node of g."""
    forms = set()
    for t in g.nodes:
        forms.add(Interval(NULL, t))
        forms.add(Interval(t, OBJECT))
        forms.add(Interval(t, t))
    kept = [iv for iv in forms if interval_contains(table, bound, iv)]
    return ArgumentSet(_sorted_intervals(table, kept), f"wildcard-forms-over-level({g.level})")


def _candidates_per_hole(table: "ClassTable", cls: str, args: ArgsLike) -> list[list[Interval]]:
    decl = table.lookup(cls)
    per_hole = []
    for j, param in enumerate(decl.params):
        if isinstance(args, Mapping):
            try:
                pool = list(args[(cls, j)])
            except KeyError:
                raise TypeTermError(f"no argument set for parameter {j} of class {cls}")
        else:
            pool = list(args.intervals if isinstance(args, ArgumentSet) else args)
        kept = [iv for iv in pool if interval_contains(table, param.interval, iv)]
        per_hole.append(_sorted_intervals(table, kept))
    return per_hole


def _assemble(table: "ClassTable", grounds: Iterable[TypeTerm], generic_classes: Iterable[str],
              args: ArgsLike, level: int, mode: str, budget: Budget | None) -> SubtypingGraph:
    terms: list[TypeTerm] = list(grounds)
    plans = {cls: _candidates_per_hole(table, cls, args) for cls in generic_classes}
    total = len(set(terms))
    for per_hole in plans.values():
        count = 1
        for cands in per_hole:
            count *= len(cands)
        total += count
    if budget is not None and total > budget.max_nodes:
        raise BudgetError(
            f"level {level} would have {total} nodes, over the budget of {budget.max_nodes}",
            largest_level=level - 1)
    for cls, per_hole in plans.items():
        for combo in itertools.product(*per_hole):
            terms.append(App(cls, combo))
    return build_graph(table, terms, level, mode)


def build(table: "ClassTable", args: ArgsLike, *, level: int = 1,
          mode: str = MODE_INTERVALS, budget: Budget | None = None) -> SubtypingGraph:
    """Substitute argument intervals into every hole of the skeleton.

    args is either one pool (pruned per hole against the declared bounds)
    or a mapping from (class name, hole index) to that hole's candidates.
    Nodes are all ground class types plus every admissible application;
    the order is recomputed pairwise from the decision procedure.
    """
    grounds = [Ground(name) for name in table.ground_classes()]
    return _assemble(table, grounds, table.generic_classes(), args, level, mode, budget)


def seed(table: "ClassTable", mode: str = MODE_INTERVALS) -> SubtypingGraph:
    """The level-0 graph: every hole holds its declared default interval."""
    defaults = {(cls, j): [param.interval]
                for cls in table.generic_classes()
                for j, param in enumerate(table.lookup(cls).params)}
    return build(table, defaults, level=0, mode=mode)


def apply_host(host: SubtypingGraph, args: ArgsLike, budget: Budget | None = None) -> SubtypingGraph:
    """Substitute args into the holes of the host's node patterns.

    Every parameterized node contributes its head-class pattern K<#,...,#>
    (so equal-head nodes collapse to one pattern) and every ground node
    passes through; this realizes the G_a(X) notation.
    """
    table = host.table
    grounds = [t for t in host.nodes if isinstance(t, Ground)]
    heads = sorted({t.cls for t in host.nodes if isinstance(t, App)})
    return _assemble(table, grounds, heads, args, host.level + 1, host.mode, budget)


# --------------------------------------------------------------------------
# Level iteration

@dataclass
class LevelSequence:
    """The constructed prefix G0..Gn, with an error marker when a budget stopped it."""

    table: "ClassTable"
    mode: str
    levels: list[SubtypingGraph]
    error: str | None = None
    _censuses: dict[int, Census] = field(default_factory=dict, repr=False)

    def census(self, level: int) -> Census:
        if level not in self._censuses:
            self._censuses[level] = census_by_distance(self.levels[level])
        return self._censuses[level]

    def node_counts(self) -> list[int]:
        return [len(g.nodes) for g in self.levels]

    def edge_counts(self) -> list[int]:
        return [g.edge_count() for g in self.levels]


def expand(table: "ClassTable", upto: int = 2, mode: str = MODE_INTERVALS,
           budget: Budget | None = None) -> LevelSequence:
    """Materialize levels 0..upto, stopping early when the budget is hit."""
    if mode not in (MODE_INTERVALS, MODE_WILDCARDS):
        raise TypeTermError(f"unknown mode {mode!r}")
    if budget is None:
        budget = Budget.from_env()
    over = intervals_over if mode == MODE_INTERVALS else wildcard_forms_over
    levels: list[SubtypingGraph] = []
    error = None
    for i in range(upto + 1):
        if i > budget.max_level:
            error = f"level {i} exceeds the level budget of {budget.max_level}"
            break
        try:
            if i == 0:
                g = seed(table, mode)
            else:
                g = build(table, over(table, levels[-1]), level=i, mode=mode, budget=budget)
        except BudgetError as exc:
            error = str(exc)
            break
        levels.append(g)
    return LevelSequence(table, mode, levels, error)


# --------------------------------------------------------------------------
# Transformations and embeddings

def transform(g: SubtypingGraph, kind: str) -> SubtypingGraph:
    """copy = identity, flip = dual order, flatten = discrete order."""
    if kind == COPY:
        return g
    if kind == FLIP:
        return g.with_relation(g.closed.T)
    if kind == FLATTEN:
        return g.with_relation(np.eye(len(g.nodes), dtype=bool))
    raise TypeTermError(f"unknown transformation {kind!r}")


_EMBED_INTERVAL = {
    COPY: lambda t: Interval(NULL, t),
    FLIP: lambda t: Interval(t, OBJECT),
    FLATTEN: lambda t: Interval(t, t),
}


@dataclass(frozen=True)
class EmbeddingReport:
    """How one transformation of a level graph sits inside the next level."""

    cls: str
    hole: int
    kind: str
    mapping: tuple[tuple[TypeTerm, TypeTerm], ...]  # (source node, image node)
    pruned: tuple[TypeTerm, ...]  # sources whose image violates the hole's bounds
    verified: bool


def embedding_image(table: "ClassTable", g: SubtypingGraph, cls: str, hole: int,
                    kind: str) -> EmbeddingReport:
    """Map each node T of g into the given hole and check the order claim.

    copy sends T to [Null, T] and must preserve order, flip sends T to
    [T, Object] and must reverse it, flatten sends T to [T, T] and must
    produce an antichain.  Sources excluded by the hole's declared bounds
    are recorded as pruned and skipped by the check.
    """
    decl = table.lookup(cls)
    if decl is None:
        raise UnknownClassError(f"unknown class {cls!r}")
    if not decl.generic:
        raise TypeTermError(f"class {cls} is not generic")
    if not 0 <= hole < len(decl.params):
        raise TypeTermError(f"class {cls} has no hole {hole}")
    if kind not in KINDS:
        raise TypeTermError(f"unknown transformation {kind!r}")
    make = _EMBED_INTERVAL[kind]
    declared = decl.params[hole].interval
    mapping = []
    pruned = []
    for t in g.nodes:
        iv = make(t)
        if not interval_contains(table, declared, iv):
            pruned.append(t)
            continue
        image_args = tuple(iv if j == hole else p.interval for j, p in enumerate(decl.params))
        mapping.append((t, App(cls, image_args)))
    verified = _verify_embedding(table, g, mapping, kind)
    return EmbeddingReport(cls, hole, kind, tuple(mapping), tuple(pruned), verified)


def _verify_embedding(table: "ClassTable", g: SubtypingGraph,
                      mapping: list[tuple[TypeTerm, TypeTerm]], kind: str) -> bool:
    for s, img_s in mapping:
        for t, img_t in mapping:
            source_leq = g.leq(s, t)
            if kind == COPY:
                if is_subtype(table, img_s, img_t) != source_leq:
                    return False
            elif kind == FLIP:
                if is_subtype(table, img_t, img_s) != source_leq:
                    return False
            else:
                if s != t and (is_subtype(table, img_s, img_t)
                               or is_subtype(table, img_t, img_s)):
                    return False
    return True


# --------------------------------------------------------------------------
# Equation checks

@dataclass(frozen=True)
class EquationCheck:
    label: str
    equal: bool
    expected_equal: bool

    @property
    def ok(self) -> bool:
        return self.equal == self.expected_equal


def check_equations(table: "ClassTable", upto: int,
                    budget: Budget | None = None) -> list[EquationCheck]:
    """Evaluate the substitution equalities between level graphs.

    For each i <= upto: substituting the level-i intervals into the seed
    or into level i itself must agree, substituting the seed intervals
    into level i must reproduce level 1, and the two mixed substitutions
    must differ for i >= 1.
    """
    if upto < 1:
        raise TypeTermError("equation checks need upto >= 1")
    seq = expand(table, upto, MODE_INTERVALS, budget)
    if seq.error:
        raise BudgetError(seq.error, largest_level=len(seq.levels) - 1)
    g0 = seq.levels[0]
    i0 = intervals_over(table, g0)
    base = apply_host(g0, i0, budget)
    checks = []
    for i in range(1, upto + 1):
        gi = seq.levels[i]
        ii = intervals_over(table, gi)
        new_in_old = apply_host(g0, ii, budget)
        new_in_new = apply_host(gi, ii, budget)
        old_in_new = apply_host(gi, i0, budget)
        checks.append(EquationCheck(
            f"G0(I(G{i})) = G{i}(I(G{i}))", graph_equal(new_in_old, new_in_new), True))
        checks.append(EquationCheck(
            f"G{i}(I(G0)) = G0(I(G0))", graph_equal(old_in_new, base), True))
        checks.append(EquationCheck(
            f"G{i}(I(G0)) != G0(I(G{i}))", graph_equal(old_in_new, new_in_old), False))
    return checks


__all__ = [
    "ArgumentSet", "Budget", "EmbeddingReport", "EquationCheck", "LevelSequence",
    "COPY", "FLIP", "FLATTEN", "KINDS",
    "apply_host", "build", "check_equations", "embedding_image", "expand",
    "intervals_over", "seed", "transform", "wildcard_forms_over",
]
