"""Command-line front end.

Grids print with q increasing upward (row 0 at the bottom) and p increasing
to the right.  Exit codes: 0 success, 1 verification or construction
failure, 2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .board import BoardError, board as get_board
from .constructions import (
    ConstructionImpossible,
    ConstructionInvalid,
    HypothesisViolation,
    construct_exceptional,
    construct_ha,
    construct_hb,
    construct_n1,
    construct_n2,
)
from .decoder import DFS_CAP, DIAGONAL_CAP, CapExceeded, InvalidSpec, PathSpec, decode, enumerate_paths, hamiltonian_cycles, spec_of
from .render import path_document, render_map
from .verify import SUITES
from .walk import WalkError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

DEFAULTS = {"dfs_cap": DFS_CAP, "diagonal_cap": DIAGONAL_CAP, "map_format": "ascii", "path_format": "ascii"}


class UsageError(Exception):
    pass


def load_config(path: Optional[str]) -> dict:
    cfg = dict(DEFAULTS)
    if not path:
        return cfg
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        raise UsageError(f"unknown config keys {sorted(unknown)}")
    cfg.update(data)
    return cfg


def parse_square(text: str):
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected a square as P,Q, got {text!r}") from None
    return p, q


def parse_east(text: str):
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated diagonal indices, got {text!r}") from None


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def fail_json(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}, separators=(",", ":")) + "\n")


# --- subcommands ----------------------------------------------------------------------


def cmd_map(args, cfg) -> int:
    b = get_board(args.m, args.n)
    emit(render_map(b, args.mode, args.format or cfg["map_format"]), args.out)
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} needs {' '.join(missing)}")


def cmd_path(args, cfg) -> int:
    notes: List[str] = []
    log: list = []
    if args.spec:
        _need(args, "m", "n", "init", "term")
        b = get_board(args.m, args.n)
        spec = PathSpec(parse_square(args.init), parse_square(args.term), parse_east(args.east or ""))
        w = decode(b, spec)
        if w is None:
            fail_json("NoPath", f"no hamiltonian path has coordinates {spec.to_dict()} on {b}")
            return EXIT_FAIL
    else:
        kind = args.kind
        if kind is None:
            raise UsageError("give --kind or --spec")
        if kind == "ha":
            _need(args, "m", "n", "a")
            w = construct_ha(get_board(args.m, args.n), args.a, log)
        elif kind == "hb":
            _need(args, "m", "n", "a")
            bb = args.b if args.b is not None else args.m + args.n - 3 - args.a
            w = construct_hb(get_board(args.m, args.n), args.a, bb, log)
        elif kind == "exceptional":
            _need(args, "m")
            w = construct_exceptional(args.m, log)
        elif kind == "n1":
            _need(args, "m", "p")
            w = construct_n1(args.m, args.p)
        else:
            _need(args, "m", "row")
            w = construct_n2(args.m, args.row, args.p, args.q)
    for entry in log:
        if entry.source == "decoder":
            notes.append(f"printed {entry.kind} formula failed ({entry.note}); path recovered by decoding")
    emit(path_document(w, spec_of(w).to_dict(), args.format or cfg["path_format"], notes), args.out)
    return EXIT_OK


def cmd_enumerate(args, cfg) -> int:
    b = get_board(args.m, args.n)
    if args.method == "dfs":
        rep = enumerate_paths(b, "dfs", cap=args.dfs_cap or cfg["dfs_cap"])
    else:
        rep = enumerate_paths(b, "diagonal", cap=args.diagonal_cap or cfg["diagonal_cap"])
    cycles = hamiltonian_cycles(rep.paths)
    if cycles:
        rep.notes.append(f"hamiltonian cycle witness: {cycles[0].to_json()}")
    emit("\n".join(rep.to_lines(include_paths=not args.count_only)) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args, cfg) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    out = []
    for name in names:
        if name == "constructions":
            rep = SUITES[name](max_m=args.max_m or 12)
        elif name == "n12":
            rep = SUITES[name](max_m=args.max_m or 10)
        else:
            rep = SUITES[name](max_m=args.max_m or 6, max_n=args.max_n or 6)
        ok = ok and rep.ok
        out.extend(rep.lines())
    out.append("OK" if ok else "FAILED")
    emit("\n".join(out) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


# --- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="projboard",
        description="Hamiltonian paths on m x n projective checkerboards. "
        "Grids are drawn with q increasing upward and p to the right.",
    )
    ap.add_argument("--config", help="JSON file with dfs_cap, diagonal_cap, map_format, path_format")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("map", help="draw the initial or terminal squares (needs m >= n)")
    sp.add_argument("--mode", choices=("init", "term"), required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("ascii", "json", "svg"))
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_map)

    sp = sub.add_parser("path", help="build a path from a family or from its coordinates")
    sp.add_argument("--kind", choices=("ha", "hb", "exceptional", "n1", "n2"))
    sp.add_argument("--spec", action="store_true", help="decode from --init, --term and --east")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--row", help="m x 2 family A2..J2")
    sp.add_argument("--init", help="initial square P,Q")
    sp.add_argument("--term", help="terminal square P,Q")
    sp.add_argument("--east", help="comma-separated lower indices of east diagonals")
    sp.add_argument("--format", choices=("ascii", "json", "svg"))
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("enumerate", help="list every hamiltonian path of a board")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("diagonal", "dfs"), default="diagonal")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--dfs-cap", type=int, help=f"max squares for DFS (default {DFS_CAP})")
    sp.add_argument("--diagonal-cap", type=int, help=f"max m+n for decoding (default {DIAGONAL_CAP})")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the cross-validation suites")
    sp.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    sp.add_argument("--max-m", type=int)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except CapExceeded as exc:
        fail_json("CapExceeded", str(exc))
        return EXIT_CAP
    except HypothesisViolation as exc:
        fail_json("HypothesisViolation", str(exc))
        return EXIT_USAGE
    except (UsageError, BoardError, InvalidSpec, WalkError) as exc:
        fail_json(type(exc).__name__, str(exc))
        return EXIT_USAGE
    except (ConstructionImpossible, ConstructionInvalid) as exc:
        fail_json(type(exc).__name__, str(exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
