"""The recursive subtyping decision procedure and the interval relations."""

from __future__ import annotations

from typing import TYPE_CHECKING

from .errors import UnknownClassError
from .types import Ground, Interval, TypeTerm

if TYPE_CHECKING:
    from .skeleton import ClassTable


def is_subtype(table: "ClassTable", s: TypeTerm, t: TypeTerm) -> bool:
    """Decide s <: t.

    Object is the top type, Null the bottom; ground types follow the
    declared subclassing; two applications of the same generic class are
    ordered by per-position interval containment (use-site variance).
    Recursion descends strictly into argument endpoints, so it terminates.
    """
    cache = table.subtype_cache
    key = (s, t)
    hit = cache.get(key)
    if hit is not None:
        return hit
    result = _decide(table, s, t)
    cache[key] = result
    return result


def _decide(table: "ClassTable", s: TypeTerm, t: TypeTerm) -> bool:
    if t == Ground("Object"):
        return True
    if s == Ground("Null"):
        return True
    if isinstance(t, Ground):
        if isinstance(s, Ground) and table.lookup(s.cls) is None:
            raise UnknownClassError(f"unknown class {s.cls!r}")
        if table.lookup(t.cls) is None:
            raise UnknownClassError(f"unknown class {t.cls!r}")
        # ground or parameterized s against a ground t: subclassing decides
        return table.subclass_of(_head(s), t.cls)
    if isinstance(s, Ground):
        return False
    if s.cls != t.cls:
        return False
    return all(interval_contains(table, ti, si) for si, ti in zip(s.args, t.args))


def _head(term: TypeTerm) -> str:
    return term.cls


def interval_contains(table: "ClassTable", i1: Interval, i2: Interval) -> bool:
    """True iff i2 lies within i1: i1.lo <: i2.lo and i2.hi <: i1.hi."""
    return is_subtype(table, i1.lo, i2.lo) and is_subtype(table, i2.hi, i1.hi)


def interval_precedes(table: "ClassTable", i1: Interval, i2: Interval) -> bool:
    """True iff i1 ends no later than i2 starts: i1.hi <: i2.lo."""
    return is_subtype(table, i1.hi, i2.lo)


__all__ = ["is_subtype", "interval_contains", "interval_precedes"]
