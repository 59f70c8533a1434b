"""Canonical type terms and intervals.

Every type argument is stored as an interval ``[lo, hi]`` with ``lo <: hi``;
the Java wildcard spellings are views over that single representation:

    ?            -> the declared interval of the parameter position
    ? extends T  -> [Null, T]
    ? super S    -> [S, Object]
    T            -> [T, T]

which makes the identifications ``? extends Null = Null`` and
``? super Object = Object`` hold by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .errors import ParseError, TypeTermError, UnknownClassError
from .lexing import TokenStream, tokenize

if TYPE_CHECKING:
    from .skeleton import ClassTable

JAVA = "java"
SHORT = "short"
INTERVAL = "interval"
STYLES = (JAVA, SHORT, INTERVAL)


@dataclass(frozen=True)
class Ground:
    """A class type of a non-generic class."""

    cls: str


@dataclass(frozen=True)
class App:
    """A generic class applied to one interval per parameter."""

    cls: str
    args: tuple["Interval", ...]


TypeTerm = Union[Ground, App]


@dataclass(frozen=True)
class Interval:
    """An ordered pair of types acting as a type argument; lo <: hi."""

    lo: TypeTerm
    hi: TypeTerm


OBJECT = Ground("Object")
NULL = Ground("Null")
DEFAULT_INTERVAL = Interval(NULL, OBJECT)


# --------------------------------------------------------------------------
# Raw syntax trees (resolved against a ClassTable in a second step, so the
# class DSL can canonicalize bounds after all declarations are known).

@dataclass(frozen=True)
class RawType:
    name: str
    args: tuple["RawArg", ...]
    pos: int


@dataclass(frozen=True)
class RawWild:
    pos: int


@dataclass(frozen=True)
class RawExtends:
    bound: RawType


@dataclass(frozen=True)
class RawSuper:
    bound: RawType


@dataclass(frozen=True)
class RawExact:
    type: RawType


@dataclass(frozen=True)
class RawInterval:
    lo: RawType
    hi: RawType
    pos: int


RawArg = Union[RawWild, RawExtends, RawSuper, RawExact, RawInterval]


def parse_type_raw(stream: TokenStream) -> RawType:
    """typeexpr := IDENT ("<" arg ("," arg)* ">")?"""
    head = stream.expect_ident()
    args: list[RawArg] = []
    if stream.at_punct("<"):
        stream.next()
        args.append(_parse_arg(stream))
        while stream.at_punct(","):
            stream.next()
            args.append(_parse_arg(stream))
        stream.expect_punct(">")
    return RawType(head.text, tuple(args), head.pos)


def _parse_arg(stream: TokenStream) -> RawArg:
    tok = stream.peek()
    if tok.kind == "?":
        stream.next()
        if stream.at_ident("extends"):
            stream.next()
            return RawExtends(parse_type_raw(stream))
        if stream.at_ident("super"):
            stream.next()
            return RawSuper(parse_type_raw(stream))
        return RawWild(tok.pos)
    if tok.kind == "?x":
        stream.next()
        return RawExtends(parse_type_raw(stream))
    if tok.kind == "?s":
        stream.next()
        return RawSuper(parse_type_raw(stream))
    if tok.kind == "punct" and tok.text == "[":
        stream.next()
        lo = parse_type_raw(stream)
        stream.expect_punct("-")
        hi = parse_type_raw(stream)
        stream.expect_punct("]")
        return RawInterval(lo, hi, tok.pos)
    return RawExact(parse_type_raw(stream))


def resolve_type(table: "ClassTable", raw: RawType) -> TypeTerm:
    """Resolve a raw tree to a canonical, validated TypeTerm."""
    from .subtyping import interval_contains, is_subtype

    decl = table.lookup(raw.name)
    if decl is None:
        raise UnknownClassError(f"unknown class {raw.name!r}")
    if len(raw.args) != len(decl.params):
        raise TypeTermError(
            f"class {raw.name} takes {len(decl.params)} type argument(s), got {len(raw.args)}")
    if not decl.params:
        return Ground(raw.name)
    args = []
    for param, ra in zip(decl.params, raw.args):
        declared = param.interval
        if isinstance(ra, RawWild):
            iv = declared
        elif isinstance(ra, RawExtends):
            iv = Interval(NULL, resolve_type(table, ra.bound))
        elif isinstance(ra, RawSuper):
            iv = Interval(resolve_type(table, ra.bound), OBJECT)
        elif isinstance(ra, RawExact):
            term = resolve_type(table, ra.type)
            iv = Interval(term, term)
        else:
            lo = resolve_type(table, ra.lo)
            hi = resolve_type(table, ra.hi)
            if not is_subtype(table, lo, hi):
                raise TypeTermError(
                    f"inverted interval: {render(table, lo)} is not a subtype of {render(table, hi)}")
            iv = Interval(lo, hi)
        if not interval_contains(table, declared, iv):
            raise TypeTermError(
                f"argument {render_interval_pair(table, iv)} violates the declared bounds "
                f"{render_interval_pair(table, declared)} of parameter {param.name} of {raw.name}")
        args.append(iv)
    return App(raw.name, tuple(args))


def parse_type(table: "ClassTable", text: str) -> TypeTerm:
    """Parse a type expression to its canonical TypeTerm."""
    stream = TokenStream(tokenize(text))
    raw = parse_type_raw(stream)
    stream.expect_eof()
    return resolve_type(table, raw)


# --------------------------------------------------------------------------
# Rendering

def render(table: "ClassTable", term: TypeTerm, style: str = JAVA) -> str:
    """Render a term in one of the three styles; parse_type inverts all of them."""
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}")
    if isinstance(term, Ground):
        return term.cls
    decl = table.lookup(term.cls)
    if decl is None or len(decl.params) != len(term.args):
        raise TypeTermError(f"ill-formed term: {term!r}")
    parts = [_render_arg(table, iv, param.interval, style)
             for iv, param in zip(term.args, decl.params)]
    return f"{term.cls}<{','.join(parts)}>"


def _render_arg(table: "ClassTable", iv: Interval, declared: Interval, style: str) -> str:
    if style == INTERVAL:
        return f"[{render(table, iv.lo, style)}-{render(table, iv.hi, style)}]"
    if iv == declared:
        return "?"
    if iv.lo == iv.hi:
        return render(table, iv.hi, style)
    if iv.lo == NULL:
        body = render(table, iv.hi, style)
        return f"? extends {body}" if style == JAVA else f"?x{body}"
    if iv.hi == OBJECT:
        body = render(table, iv.lo, style)
        return f"? super {body}" if style == JAVA else f"?s{body}"
    return f"[{render(table, iv.lo, style)}-{render(table, iv.hi, style)}]"


def render_interval_pair(table: "ClassTable", iv: Interval) -> str:
    """[lo-hi] spelling of a bare interval, used in diagnostics and reports."""
    return f"[{render(table, iv.lo)}-{render(table, iv.hi)}]"


def canonical_key(table: "ClassTable", term: TypeTerm) -> str:
    """Sort key used everywhere a deterministic node order is needed."""
    return render(table, term, JAVA)


def expressible(table: "ClassTable", term: TypeTerm) -> bool:
    """True iff the java rendering avoids the hidden class Null.

    The visible endpoints follow the same choices as :func:`render`: a
    default argument hides its endpoints entirely, ``? extends T`` hides the
    Null lowerbound, ``? super S`` hides the Object upperbound.
    """
    if isinstance(term, Ground):
        return term.cls != "Null"
    decl = table.lookup(term.cls)
    for iv, param in zip(term.args, decl.params):
        if iv == param.interval:
            continue
        if iv.lo == iv.hi:
            ok = expressible(table, iv.lo)
        elif iv.lo == NULL:
            ok = expressible(table, iv.hi)
        elif iv.hi == OBJECT:
            ok = expressible(table, iv.lo)
        else:
            ok = expressible(table, iv.lo) and expressible(table, iv.hi)
        if not ok:
            return False
    return True


# --------------------------------------------------------------------------
# Rank

def rank(table: "ClassTable", term: TypeTerm) -> int:
    """The construction level at which a term first appears.

    Ground types have rank 0.  A default argument contributes -1, so the
    seed applications (C<?> and friends) land at rank 0; any other argument
    contributes the larger of its endpoint ranks.
    """
    if isinstance(term, Ground):
        if table.lookup(term.cls) is None:
            raise UnknownClassError(f"unknown class {term.cls!r}")
        return 0
    decl = table.lookup(term.cls)
    if decl is None or len(decl.params) != len(term.args):
        raise TypeTermError(f"ill-formed term: {term!r}")
    deepest = -1
    for iv, param in zip(term.args, decl.params):
        if iv == param.interval:
            contrib = -1
        else:
            contrib = max(rank(table, iv.lo), rank(table, iv.hi))
        deepest = max(deepest, contrib)
    return 1 + deepest


__all__ = [
    "App", "Ground", "Interval", "TypeTerm",
    "OBJECT", "NULL", "DEFAULT_INTERVAL",
    "JAVA", "SHORT", "INTERVAL", "STYLES",
    "RawType", "RawArg", "RawWild", "RawExtends", "RawSuper", "RawExact", "RawInterval",
    "parse_type", "parse_type_raw", "resolve_type",
    "render", "render_interval_pair", "canonical_key", "expressible", "rank",
    "ParseError",
]
