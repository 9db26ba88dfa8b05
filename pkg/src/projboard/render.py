"""Text, JSON and SVG renderings of endpoint maps and paths.

Grids are drawn with q increasing upward and p increasing to the right, so
row 0 is the bottom line of the output.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from . import __version__
from .board import Board, BoardError, E, Square
from .characterization import initial_square, n1_pairs, n2_row, N2_ROWS, terminal_square
from .walk import Walk, travel_map

INITIAL_MARK = "•"
TERMINAL_MARK = "■"
SHADE_MARK = "▒"
EMPTY_MARK = "·"
ARROWS = {"E": "→", "N": "↑"}

CELL = 28


def endpoint_clauses(b: Board, mode: str) -> Dict[Square, Tuple[str, ...]]:
    """Squares that are initial (mode 'init') or terminal ('term'), with clause labels."""
    if mode not in ("init", "term"):
        raise BoardError(f"unknown map mode {mode!r}")
    if b.n > b.m:
        raise BoardError(f"maps use m >= n; got {b}, draw the {b.n}x{b.m} board and transpose")
    if b.n >= 3:
        fn = initial_square if mode == "init" else terminal_square
        return {r.square: r.clauses for r in (fn(b, s) for s in b.squares()) if r}
    slot = 0 if mode == "init" else 1
    out: Dict[Square, List[str]] = {}
    if b.n == 1:
        for pair in n1_pairs(b.m):
            out.setdefault(pair[slot], []).append("n1")
    else:
        for row in N2_ROWS:
            for pair in n2_row(b.m, row):
                out.setdefault(pair[slot], []).append(row)
    return {s: tuple(sorted(set(v))) for s, v in out.items()}


def _grid(b: Board, cell) -> List[str]:
    cells = {s: cell(s) for s in b.squares()}
    width = max(len(str(b.m - 1)), *(len(c) for c in cells.values()))
    lines = []
    for q in range(b.n - 1, -1, -1):
        row = " ".join(cells[(p, q)].rjust(width) for p in range(b.m))
        lines.append(f"{q:>{len(str(b.n - 1))}} | {row}")
    pad = " " * len(str(b.n - 1))
    lines.append(f"{pad} +-" + "-" * (len(lines[0]) - len(pad) - 3))
    lines.append(f"{pad}   " + " ".join(str(p).rjust(width) for p in range(b.m)))
    return lines


def map_ascii(b: Board, mode: str) -> str:
    marks = endpoint_clauses(b, mode)
    mark = INITIAL_MARK if mode == "init" else TERMINAL_MARK
    kind = "initial" if mode == "init" else "terminal"
    lines = [f"{kind} squares of the {b.m}x{b.n} board ({len(marks)} of {b.size})"]
    lines += _grid(b, lambda s: mark if s in marks else EMPTY_MARK)
    return "\n".join(lines) + "\n"


def map_json(b: Board, mode: str) -> str:
    marks = endpoint_clauses(b, mode)
    doc = {
        "m": b.m,
        "n": b.n,
        "mode": mode,
        "count": len(marks),
        "squares": [{"square": list(s), "clauses": list(marks[s])} for s in sorted(marks)],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _svg_open(b: Board, title: str) -> List[str]:
    w, h = b.m * CELL + 2 * CELL, b.n * CELL + 2 * CELL
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" data-generator="projboard {__version__}">',
        f"  <title>{title}</title>",
    ]


def _svg_xy(b: Board, s: Square) -> Tuple[int, int]:
    """Top-left corner of square s; q grows upward."""
    return CELL + s[0] * CELL, CELL + (b.n - 1 - s[1]) * CELL


def _svg_grid(b: Board) -> List[str]:
    out = []
    for s in b.squares():
        x, y = _svg_xy(b, s)
        out.append(f'  <rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="none" stroke="#888"/>')
    return out


def map_svg(b: Board, mode: str) -> str:
    marks = endpoint_clauses(b, mode)
    lines = _svg_open(b, f"{mode} squares {b.m}x{b.n}")
    lines += _svg_grid(b)
    half = CELL // 2
    for s in sorted(marks):
        x, y = _svg_xy(b, s)
        if mode == "init":
            lines.append(f'  <circle cx="{x + half}" cy="{y + half}" r="{CELL // 4}" fill="#000"/>')
        else:
            lines.append(f'  <rect x="{x + CELL // 4}" y="{y + CELL // 4}" width="{half}" height="{half}" fill="#000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_map(b: Board, mode: str, fmt: str) -> str:
    return {"ascii": map_ascii, "json": map_json, "svg": map_svg}[fmt](b, mode)


# --- paths ----------------------------------------------------------------------


def path_ascii(w: Walk) -> str:
    """Each square shows its move; the start carries '•', the end '■', the terminal diagonal '▒'."""
    b = w.board
    tmap = travel_map(w)
    terminal = b.diagonal_of(w.end)

    def cell(s):
        head = INITIAL_MARK if s == w.start else " "
        body = TERMINAL_MARK if s == w.end else ARROWS[tmap[s]]
        tail = SHADE_MARK if s in terminal else " "
        return head + body + tail

    return "\n".join(_grid(b, cell)) + "\n"


def path_svg(w: Walk) -> str:
    b = w.board
    tmap = travel_map(w)
    terminal = b.diagonal_of(w.end)
    lines = _svg_open(b, f"path on {b.m}x{b.n} from {w.start} to {w.end}")
    for s in sorted(terminal.members):
        x, y = _svg_xy(b, s)
        lines.append(f'  <rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="#ddd"/>')
    lines += _svg_grid(b)
    half = CELL // 2
    for s in b.squares():
        x, y = _svg_xy(b, s)
        cx, cy = x + half, y + half
        if s == w.end:
            lines.append(f'  <rect x="{x + CELL // 4}" y="{y + CELL // 4}" width="{half}" height="{half}" fill="#000"/>')
            continue
        if s == w.start:
            lines.append(f'  <circle cx="{cx}" cy="{cy}" r="{CELL // 5}" fill="#000"/>')
        dx, dy = (half - 3, 0) if tmap[s] == E else (0, -(half - 3))
        lines.append(f'  <line x1="{cx}" y1="{cy}" x2="{cx + dx}" y2="{cy + dy}" stroke="#c00" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def trace_text(w: Walk) -> str:
    return " ".join(f"({p},{q})" for p, q in w.squares())


def path_document(w: Walk, spec: Optional[dict], fmt: str, notes: List[str]) -> str:
    if fmt == "json":
        doc = {
            "walk": json.loads(w.to_json()),
            "trace": [list(s) for s in w.squares()],
            "spec": spec,
            "notes": notes,
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "svg":
        return path_svg(w)
    head = [f"moves: {w.moves}", f"trace: {trace_text(w)}", f"spec: {json.dumps(spec, separators=(',', ':'))}"]
    head += [f"note: {x}" for x in notes]
    return "\n".join(head) + "\n" + path_ascii(w)
