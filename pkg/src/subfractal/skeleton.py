"""Class-hierarchy DSL: the skeleton that seeds every construction.

A program is a sequence of declarations like

    class C<T> extends Object {}
    class E<T extends C<?>>;

Object and Null are implicit: Object is the non-generic top, Null the
non-generic bottom (a subclass of every class).  Superclasses must be
non-generic; bounds may reference classes declared later in the program.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import DeclError, ParseError, TypeTermError, UnknownClassError
from .lexing import Token, TokenStream, tokenize
from .types import (
    App,
    Ground,
    Interval,
    NULL,
    OBJECT,
    RawType,
    TypeTerm,
    parse_type_raw,
    render,
    resolve_type,
)

KEYWORDS = {"class", "extends", "super"}
BUILTINS = ("Object", "Null")


@dataclass(frozen=True)
class TypeParam:
    """A declared type parameter with its (canonicalized) bound interval."""

    name: str
    lower: TypeTerm = NULL
    upper: TypeTerm = OBJECT

    @property
    def interval(self) -> Interval:
        return Interval(self.lower, self.upper)


@dataclass(frozen=True)
class ClassDecl:
    name: str
    params: tuple[TypeParam, ...] = ()
    superclass: str | None = "Object"  # None only for the built-in top/bottom

    @property
    def generic(self) -> bool:
        return bool(self.params)


class ClassTable:
    """Immutable view of a validated class hierarchy.

    Holds the declarations (built-ins included) and a memo table for the
    subtyping decision procedure; safe to share once constructed.
    """

    def __init__(self, decls: Mapping[str, ClassDecl], source: str = ""):
        self._decls = dict(decls)
        self.source = source
        self.subtype_cache: dict = {}

    @property
    def decls(self) -> Mapping[str, ClassDecl]:
        return self._decls

    def lookup(self, name: str) -> ClassDecl | None:
        return self._decls.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._decls

    def class_names(self) -> tuple[str, ...]:
        return tuple(self._decls)

    def ground_classes(self) -> tuple[str, ...]:
        return tuple(n for n, d in self._decls.items() if not d.generic)

    def generic_classes(self) -> tuple[str, ...]:
        return tuple(n for n, d in self._decls.items() if d.generic)

    def subclass_of(self, a: str, b: str) -> bool:
        for name in (a, b):
            if name not in self._decls:
                raise UnknownClassError(f"unknown class {name!r}")
        if a == b or b == "Object" or a == "Null":
            return True
        cur = self._decls[a].superclass
        while cur is not None:
            if cur == b:
                return True
            cur = self._decls[cur].superclass
        return False

    def default_application(self, name: str) -> TypeTerm:
        """The seed node of a class: its name applied to the declared intervals."""
        decl = self._decls.get(name)
        if decl is None:
            raise UnknownClassError(f"unknown class {name!r}")
        if not decl.generic:
            return Ground(name)
        return App(name, tuple(p.interval for p in decl.params))

    def describe(self) -> Iterator[str]:
        """One normalized line per class, built-ins included."""
        for name, decl in self._decls.items():
            if name in BUILTINS:
                yield f"class {name} (built-in)"
                continue
            params = ""
            if decl.generic:
                parts = []
                for p in decl.params:
                    part = p.name
                    if p.upper != OBJECT:
                        part += f" extends {render(self, p.upper)}"
                    if p.lower != NULL:
                        part += f" super {render(self, p.lower)}"
                    parts.append(part)
                params = f"<{','.join(parts)}>"
            yield f"class {name}{params} extends {decl.superclass}"


def subclass_of(table: ClassTable, a: str, b: str) -> bool:
    """Reflexive-transitive subclassing; Null below every class, Object on top."""
    return table.subclass_of(a, b)


# --------------------------------------------------------------------------
# Parsing

@dataclass
class _RawParam:
    name: str
    upper: RawType | None
    lower: RawType | None


@dataclass
class _RawDecl:
    name: str
    params: list[_RawParam]
    superclass: str
    pos: int


def parse_skeleton(text: str) -> ClassTable:
    """Parse and validate a DSL program into a ClassTable."""
    raws = _parse_program(text)
    decls = _validate(raws)
    return ClassTable(decls, source=text)


def _parse_program(text: str) -> list[_RawDecl]:
    stream = TokenStream(tokenize(text))
    raws = []
    while stream.peek().kind != "eof":
        raws.append(_parse_decl(stream))
    return raws


def _name_token(stream: TokenStream) -> Token:
    tok = stream.expect_ident()
    if tok.text in KEYWORDS:
        raise ParseError("keyword used as a name", tok.pos, tok.text)
    return tok


def _parse_decl(stream: TokenStream) -> _RawDecl:
    kw = stream.peek()
    if not stream.at_ident("class"):
        raise ParseError("expected 'class'", kw.pos, kw.text)
    stream.next()
    name = _name_token(stream)
    params: list[_RawParam] = []
    if stream.at_punct("<"):
        stream.next()
        params.append(_parse_tparam(stream))
        while stream.at_punct(","):
            stream.next()
            params.append(_parse_tparam(stream))
        stream.expect_punct(">")
    superclass = "Object"
    if stream.at_ident("extends"):
        stream.next()
        superclass = stream.expect_ident().text
    if stream.at_punct(";"):
        stream.next()
    elif stream.at_punct("{"):
        stream.next()
        stream.expect_punct("}")
    return _RawDecl(name.text, params, superclass, name.pos)


def _parse_tparam(stream: TokenStream) -> _RawParam:
    name = _name_token(stream)
    upper = lower = None
    if stream.at_ident("extends"):
        stream.next()
        upper = parse_type_raw(stream)
    if stream.at_ident("super"):
        stream.next()
        lower = parse_type_raw(stream)
    return _RawParam(name.text, upper, lower)


def _validate(raws: list[_RawDecl]) -> dict[str, ClassDecl]:
    seen: set[str] = set()
    for raw in raws:
        if raw.name in BUILTINS:
            raise DeclError(f"cannot redeclare built-in class {raw.name}")
        if raw.name in seen:
            raise DeclError(f"duplicate class {raw.name}")
        seen.add(raw.name)

    by_name = {r.name: r for r in raws}
    for raw in raws:
        if raw.superclass == "Null":
            raise DeclError(f"class {raw.name} may not extend Null")
        if raw.superclass != "Object" and raw.superclass not in by_name:
            raise DeclError(f"unknown superclass {raw.superclass} of class {raw.name}")

    # cycle check before genericity so `class C<T> extends C` reports the cycle
    supers = {r.name: r.superclass for r in raws}
    for start in supers:
        chain = {start}
        cur = supers[start]
        while cur in supers:
            if cur in chain:
                raise DeclError(f"cyclic extends involving class {cur}")
            chain.add(cur)
            cur = supers[cur]

    for raw in raws:
        if raw.superclass in by_name and by_name[raw.superclass].params:
            raise DeclError(
                f"class {raw.name} extends generic class {raw.superclass}; "
                "superclasses must be non-generic")

    return _Resolver(raws).resolve_all()


class _Resolver:
    """Resolves declared bounds to canonical intervals, on demand.

    Bounds may reference classes in any order; a reference that needs the
    defaults of a class currently being resolved is a genuine circularity
    and is rejected.  Mimics enough of the ClassTable protocol for
    resolve_type and the subtyping procedure to run against it.
    """

    def __init__(self, raws: list[_RawDecl]):
        self._raws = {r.name: r for r in raws}
        self._order = [r.name for r in raws]
        self._done: dict[str, ClassDecl] = {
            "Object": ClassDecl("Object", (), None),
            "Null": ClassDecl("Null", (), None),
        }
        self._visiting: set[str] = set()
        self.subtype_cache: dict = {}

    def resolve_all(self) -> dict[str, ClassDecl]:
        for name in self._order:
            self.lookup(name)
        ordered = {"Object": self._done["Object"], "Null": self._done["Null"]}
        for name in self._order:
            ordered[name] = self._done[name]
        return ordered

    def lookup(self, name: str) -> ClassDecl | None:
        if name in self._done:
            return self._done[name]
        raw = self._raws.get(name)
        if raw is None:
            return None
        if name in self._visiting:
            raise DeclError(
                f"ill-formed bound: circular reference through the bounds of class {name}")
        self._visiting.add(name)
        try:
            from .subtyping import is_subtype

            params = []
            for rp in raw.params:
                try:
                    upper = resolve_type(self, rp.upper) if rp.upper else OBJECT
                    lower = resolve_type(self, rp.lower) if rp.lower else NULL
                except TypeTermError as exc:
                    raise DeclError(
                        f"ill-formed bound on parameter {rp.name} of class {name}: {exc}") from exc
                if not is_subtype(self, lower, upper):
                    raise DeclError(
                        f"ill-formed bound on parameter {rp.name} of class {name}: "
                        "lower bound is not a subtype of the upper bound")
                params.append(TypeParam(rp.name, lower, upper))
            decl = ClassDecl(name, tuple(params), raw.superclass)
        finally:
            self._visiting.discard(name)
        self._done[name] = decl
        return decl

    def subclass_of(self, a: str, b: str) -> bool:
        known = set(self._raws) | {"Object", "Null"}
        for n in (a, b):
            if n not in known:
                raise UnknownClassError(f"unknown class {n!r}")
        if a == b or b == "Object" or a == "Null":
            return True
        cur: str | None = self._raws[a].superclass if a in self._raws else None
        while cur is not None:
            if cur == b:
                return True
            cur = self._raws[cur].superclass if cur in self._raws else None
        return False


__all__ = [
    "ClassDecl", "ClassTable", "TypeParam",
    "parse_skeleton", "subclass_of", "BUILTINS",
]
