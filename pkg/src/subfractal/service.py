"""HTTP facade for the interactive explorer.

Lazy, windowed access to constructed levels over one shared session.
Level sequences are cached per mode and swapped atomically when a new
skeleton is posted; every response is derived from immutable snapshots,
so identical requests return identical bytes.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .construction import Budget, LevelSequence, embedding_image, expand
from .errors import (
    BudgetError,
    DeclError,
    FractalError,
    ParseError,
    UnknownClassError,
)
from .graphs import json_payload, window
from .skeleton import ClassTable, parse_skeleton
from .subtyping import is_subtype
from .types import INTERVAL, JAVA, NULL, OBJECT, SHORT, parse_type, render


class Session:
    """One skeleton plus its cached level sequences and budget."""

    def __init__(self, table: ClassTable, budget: Budget, source: str = ""):
        self.budget = budget
        self._lock = threading.Lock()
        self.table = table
        self.source = source
        self._cache: dict[str, LevelSequence] = {}

    def load(self, text: str) -> ClassTable:
        table = parse_skeleton(text)
        with self._lock:
            self.table = table
            self.source = text
            self._cache = {}
        return table

    def sequence(self, mode: str, level: int) -> tuple[ClassTable, LevelSequence]:
        """The current table and a sequence covering `level`, or BudgetError."""
        with self._lock:
            table = self.table
            seq = self._cache.get(mode)
            if seq is None or (len(seq.levels) <= level and not seq.error):
                seq = expand(table, level, mode, self.budget)
                self._cache[mode] = seq
            if len(seq.levels) <= level:
                raise BudgetError(
                    seq.error or f"level {level} is not affordable",
                    largest_level=len(seq.levels) - 1)
            return table, seq


def _renders(table: ClassTable, term) -> dict:
    return {
        "java": render(table, term, JAVA),
        "short": render(table, term, SHORT),
        "interval": render(table, term, INTERVAL),
    }


def create_app(table: ClassTable | None = None, budget: Budget | None = None,
               source: str = "", static_dir: str | Path | None = None) -> FastAPI:
    if table is None:
        table = parse_skeleton(source)
    session = Session(table, budget or Budget.from_env(), source)
    app = FastAPI(title="subtyping fractal explorer")
    app.state.session = session

    @app.exception_handler(BudgetError)
    async def _budget(request: Request, exc: BudgetError):
        return JSONResponse({"error": str(exc), "largest_level": exc.largest_level},
                            status_code=409)

    @app.exception_handler(UnknownClassError)
    async def _unknown(request: Request, exc: UnknownClassError):
        return JSONResponse({"error": str(exc)}, status_code=404)

    @app.exception_handler(FractalError)
    async def _domain(request: Request, exc: FractalError):
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.get("/api/skeleton")
    def get_skeleton():
        return {"source": session.source, "classes": list(session.table.describe())}

    @app.post("/api/skeleton")
    async def post_skeleton(request: Request):
        text = (await request.body()).decode()
        try:
            table = session.load(text)
        except ParseError as exc:
            return JSONResponse({"error": str(exc), "pos": exc.pos, "token": exc.token},
                                status_code=422)
        except DeclError as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        return {"source": text, "classes": list(table.describe())}

    @app.get("/api/graph")
    def get_graph(level: int = 0, mode: str = "intervals",
                  low: str | None = None, high: str | None = None):
        table, seq = session.sequence(mode, level)
        g = seq.levels[level]
        if low is not None or high is not None:
            lo = parse_type(table, low) if low else NULL
            hi = parse_type(table, high) if high else OBJECT
            g = window(g, lo, hi)
        return json_payload(g)

    @app.get("/api/subtype")
    def get_subtype(lhs: str, rhs: str):
        table = session.table
        s = parse_type(table, lhs)
        t = parse_type(table, rhs)
        return {
            "result": is_subtype(table, s, t),
            "lhs": _renders(table, s),
            "rhs": _renders(table, t),
        }

    @app.get("/api/embeddings")
    def get_embeddings(level: int = 0, cls: str = Query(alias="class"),
                       hole: int = 0, kind: str = "copy", mode: str = "intervals"):
        table, seq = session.sequence(mode, level)
        report = embedding_image(table, seq.levels[level], cls, hole, kind)
        return {
            "class": report.cls,
            "hole": report.hole,
            "kind": report.kind,
            "level": level,
            "verified": report.verified,
            "mapping": [[render(table, src), render(table, img)]
                        for src, img in report.mapping],
            "pruned": [render(table, src) for src in report.pruned],
        }

    @app.get("/api/census")
    def get_census(level: int = 0, mode: str = "intervals"):
        _, seq = session.sequence(mode, level)
        census = seq.census(level)
        return {"level": level, "mode": mode,
                "counts": list(census.counts), "total": census.total}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


__all__ = ["Session", "create_app"]
