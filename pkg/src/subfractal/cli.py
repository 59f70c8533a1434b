"""Command-line front end.

Subcommands map 1:1 onto engine operations:

    parse | expand | counts | census | rank | sub | check | export | serve | report

Exit codes: 0 success, 1 usage error, 2 domain error (parse, bounds, budget,
or a failed verification in `check`).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construction import (
    Budget,
    KINDS,
    check_equations,
    embedding_image,
    expand,
)
from .errors import FractalError
from .graphs import export as export_graph
from .graphs import longest_path, window
from .skeleton import ClassTable, parse_skeleton
from .subtyping import is_subtype
from .types import parse_type, rank


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we want 1
        raise _UsageError(message)


def _add_common(sub: argparse.ArgumentParser, *, upto: bool = True) -> None:
    sub.add_argument("--in", dest="infile", required=True, metavar="FILE",
                     help="class DSL source file")
    sub.add_argument("--mode", choices=["intervals", "wildcards"], default="intervals")
    if upto:
        sub.add_argument("--upto", type=int, default=2, metavar="N")
    sub.add_argument("--budget", type=int, default=None, metavar="N",
                     help="max nodes per level (also via FRACTAL_BUDGET)")
    sub.add_argument("--out", default=None, metavar="FILE", help="write output here instead of stdout")


def _build_parser() -> _Parser:
    parser = _Parser(prog="fractal", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", metavar="COMMAND")

    _add_common(subs.add_parser("parse", help="validate a skeleton and list its classes"),
                upto=False)
    _add_common(subs.add_parser("expand", help="construct levels and summarize each"))
    _add_common(subs.add_parser("counts", help="node/edge counts across levels"))
    _add_common(subs.add_parser("census", help="comparable-pair census per level"))

    p_rank = subs.add_parser("rank", help="first-appearance level of a type")
    _add_common(p_rank, upto=False)
    p_rank.add_argument("type", help="type expression")

    p_sub = subs.add_parser("sub", help="decide a subtyping judgment")
    _add_common(p_sub, upto=False)
    p_sub.add_argument("lhs", help="candidate subtype")
    p_sub.add_argument("rhs", help="candidate supertype")

    _add_common(subs.add_parser("check", help="run equation and embedding verifications"))

    p_exp = subs.add_parser("export", help="serialize one level")
    _add_common(p_exp)
    p_exp.add_argument("--level", type=int, default=None, metavar="N",
                       help="level to export (default: --upto)")
    p_exp.add_argument("--format", choices=["dot", "json", "matrix-csv"], default="dot")
    p_exp.add_argument("--window", default=None, metavar="LOW..HIGH",
                       help="restrict to the nodes between two types")

    p_srv = subs.add_parser("serve", help="serve the interactive explorer API")
    _add_common(p_srv, upto=False)
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--ui", default=None, metavar="DIR",
                       help="also serve a built explorer UI from this directory")

    p_rep = subs.add_parser("report", help="write CSV tables and figures for a run")
    _add_common(p_rep)
    p_rep.add_argument("--outdir", default="report", metavar="DIR")
    return parser


def _load_table(path: str) -> ClassTable:
    return parse_skeleton(Path(path).read_text())


def _emit(text: str, outfile: str | None) -> None:
    if outfile:
        Path(outfile).write_text(text)
    else:
        sys.stdout.write(text)


def _expand(table, args):
    return expand(table, args.upto, args.mode, Budget.from_env(args.budget))


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise _UsageError("a subcommand is required")
        if not Path(args.infile).is_file():
            raise _UsageError(f"missing input file: {args.infile}")
    except _UsageError as exc:
        print(f"fractal: {exc}", file=sys.stderr)
        return 1
    try:
        return _dispatch(args)
    except _UsageError as exc:
        print(f"fractal: {exc}", file=sys.stderr)
        return 1
    except FractalError as exc:
        print(f"fractal: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    table = _load_table(args.infile)
    command = args.command

    if command == "parse":
        lines = [f"classes: {' '.join(table.class_names())}"]
        lines.extend(table.describe())
        _emit("\n".join(lines) + "\n", args.out)
        return 0

    if command in ("expand", "counts", "census"):
        seq = _expand(table, args)
        if command == "expand":
            lines = [
                f"level {g.level}: {len(g.nodes)} nodes, {g.edge_count()} edges, "
                f"longest path {longest_path(g)}"
                for g in seq.levels
            ]
            _emit("\n".join(lines) + "\n", args.out)
        elif command == "counts":
            nodes = " ".join(str(n) for n in seq.node_counts())
            edges = " ".join(str(e) for e in seq.edge_counts())
            _emit(f"nodes: {nodes} / edges: {edges}\n", args.out)
        else:
            lines = [
                f"level {g.level}: {' '.join(str(c) for c in seq.census(g.level).counts)}"
                for g in seq.levels
            ]
            _emit("\n".join(lines) + "\n", args.out)
        if seq.error:
            print(f"fractal: {seq.error}", file=sys.stderr)
            return 2
        return 0

    if command == "rank":
        term = parse_type(table, args.type)
        _emit(f"{rank(table, term)}\n", args.out)
        return 0

    if command == "sub":
        lhs = parse_type(table, args.lhs)
        rhs = parse_type(table, args.rhs)
        _emit(f"{'true' if is_subtype(table, lhs, rhs) else 'false'}\n", args.out)
        return 0

    if command == "check":
        return _run_check(table, args)

    if command == "export":
        level = args.upto if args.level is None else args.level
        seq = expand(table, level, args.mode, Budget.from_env(args.budget))
        if seq.error or len(seq.levels) <= level:
            print(f"fractal: {seq.error}", file=sys.stderr)
            return 2
        g = seq.levels[level]
        if args.window:
            low_text, sep, high_text = args.window.partition("..")
            if not sep:
                raise _UsageError("--window expects LOW..HIGH")
            g = window(g, parse_type(table, low_text), parse_type(table, high_text))
        payload = export_graph(g, args.format)
        if args.out:
            Path(args.out).write_bytes(payload)
        else:
            sys.stdout.buffer.write(payload)
        return 0

    if command == "serve":
        from .service import create_app

        import uvicorn

        app = create_app(table, Budget.from_env(args.budget),
                         source=Path(args.infile).read_text(), static_dir=args.ui)
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
        return 0

    if command == "report":
        from .report import write_report

        seq = _expand(table, args)
        written = write_report(seq, Path(args.outdir))
        _emit("".join(f"{p}\n" for p in written), args.out)
        if seq.error:
            print(f"fractal: {seq.error}", file=sys.stderr)
            return 2
        return 0

    raise _UsageError(f"unknown subcommand {command!r}")


def _run_check(table, args) -> int:
    seq = _expand(table, args)
    if seq.error:
        print(f"fractal: {seq.error}", file=sys.stderr)
        return 2
    failures = 0
    for check in check_equations(table, max(args.upto, 1), Budget.from_env(args.budget)):
        status = "PASS" if check.ok else "FAIL"
        failures += 0 if check.ok else 1
        print(f"{status} {check.label}")
    for g in seq.levels[:-1]:
        for cls in table.generic_classes():
            for hole in range(len(table.lookup(cls).params)):
                for kind in KINDS:
                    rep = embedding_image(table, g, cls, hole, kind)
                    status = "PASS" if rep.verified else "FAIL"
                    failures += 0 if rep.verified else 1
                    print(f"{status} embedding {kind} {cls} hole {hole} level {g.level}: "
                          f"{len(rep.mapping)} mapped, {len(rep.pruned)} pruned")
    return 0 if failures == 0 else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
