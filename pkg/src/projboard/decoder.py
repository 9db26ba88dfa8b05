"""Path coordinates (initial, terminal, east-set) and exhaustive enumeration.

A hamiltonian path is pinned down by its two endpoints plus the set of
non-terminal diagonals that travel east: every non-terminal diagonal moves
as a block, and inside the terminal diagonal the direction of each square is
forced by its position relative to the initial square's east-predecessor.
:func:`decode` turns such a triple back into a walk, :func:`enumerate_diagonal`
sweeps all triples, and :func:`enumerate_dfs` is an independent backtracking
search used to check it.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from .board import Board, BoardError, E, N, Square, board as get_board
from .walk import TravelMap, Walk, WalkError, east_set, realize, require_hamiltonian, walk_from_travel_map

REPORT_FORMAT = "projboard-enumeration"
REPORT_VERSION = 1

DFS_CAP = 36
DIAGONAL_CAP = 26


class InvalidSpec(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PathSpec:
    initial: Square
    terminal: Square
    east: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "initial", tuple(self.initial))
        object.__setattr__(self, "terminal", tuple(self.terminal))
        object.__setattr__(self, "east", frozenset(self.east))

    def to_dict(self) -> dict:
        return {
            "initial": list(self.initial),
            "terminal": list(self.terminal),
            "east": sorted(self.east),
        }


def validate_spec(b: Board, spec: PathSpec) -> None:
    for s in (spec.initial, spec.terminal):
        if not b.contains(s):
            raise InvalidSpec(f"{s} is not a square of the {b} board")
    terminal = b.diagonal_of(spec.terminal)
    if b.diagonal_of(b.east_inv(spec.initial)) != terminal:
        raise InvalidSpec(
            f"initial square {spec.initial} does not follow the terminal diagonal {terminal.label}"
        )
    if terminal.singleton and b.m >= 3 and b.n >= 3:
        raise InvalidSpec("the corner square cannot be terminal when m, n >= 3")
    valid = {d.lo for d in b.diagonals if d != terminal}
    extra = set(spec.east) - valid
    if extra:
        raise InvalidSpec(f"east-set names unknown or terminal diagonals {sorted(extra)}")


def decode_travel_map(b: Board, spec: PathSpec) -> TravelMap:
    validate_spec(b, spec)
    tau, iota = spec.terminal, spec.initial
    terminal = b.diagonal_of(tau)
    tmap: TravelMap = {}
    for d in b.diagonals:
        if d == terminal:
            continue
        x = E if d.lo in spec.east else N
        for s in d.members:
            tmap[s] = x
    if not terminal.singleton:
        cut = b.u_index(terminal, tau, b.east_inv(iota))
        for s in terminal.members:
            if s != tau:
                tmap[s] = E if b.u_index(terminal, tau, s) < cut else N
    return tmap


def decode(b: Board, spec: PathSpec) -> Optional[Walk]:
    """The unique hamiltonian path with these coordinates, or None."""
    w = walk_from_travel_map(b, spec.initial, decode_travel_map(b, spec))
    if w is not None and w.end != spec.terminal:
        return None
    return w


def spec_of(w: Walk) -> PathSpec:
    require_hamiltonian(w)
    return PathSpec(w.start, w.end, east_set(w))


def is_cycle(w: Walk) -> bool:
    b = w.board
    end = w.end
    return b.east(end) == w.start or b.north(end) == w.start


# --- enumeration reports ------------------------------------------------------


@dataclass
class EnumerationReport:
    board: Board
    method: str
    paths: List[Walk] = field(default_factory=list)
    pairs: Set[Tuple[Square, Square]] = field(default_factory=set)
    elapsed: float = 0.0
    count: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def initials(self) -> Set[Square]:
        return {p[0] for p in self.pairs}

    @property
    def terminals(self) -> Set[Square]:
        return {p[1] for p in self.pairs}

    def canonical(self) -> List[str]:
        return sorted(w.to_json() for w in self.paths)

    def pair_digest(self) -> str:
        return pairs_digest(self.pairs)

    def to_lines(self, include_paths: bool = True) -> List[str]:
        header = {
            "format": REPORT_FORMAT,
            "version": REPORT_VERSION,
            "m": self.board.m,
            "n": self.board.n,
            "method": self.method,
            "count": self.count,
        }
        lines = [json.dumps(header, separators=(",", ":"))]
        if include_paths:
            lines.extend(self.canonical())
        footer = {
            "pairs": len(self.pairs),
            "pair_digest": pairs_digest(self.pairs),
            "initial_digest": squares_digest(self.initials),
            "terminal_digest": squares_digest(self.terminals),
        }
        if self.notes:
            footer["notes"] = list(self.notes)
        lines.append(json.dumps(footer, separators=(",", ":")))
        return lines


def squares_digest(squares: Iterable[Square]) -> str:
    text = json.dumps(sorted(list(s) for s in squares), separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def pairs_digest(pairs: Iterable[Tuple[Square, Square]]) -> str:
    text = json.dumps(sorted([list(a), list(b)] for a, b in pairs), separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def read_report(lines: Iterable[str]) -> EnumerationReport:
    lines = [ln for ln in lines if ln.strip()]
    if len(lines) < 2:
        raise ValueError("report needs a header and a footer line")
    header = json.loads(lines[0])
    if header.get("format") != REPORT_FORMAT or header.get("version") != REPORT_VERSION:
        raise ValueError(f"unsupported report header {header}")
    b = get_board(header["m"], header["n"])
    rep = EnumerationReport(b, header["method"], count=header["count"])
    for ln in lines[1:-1]:
        w = Walk.from_json(ln)
        rep.paths.append(w)
        rep.pairs.add((w.start, w.end))
    footer = json.loads(lines[-1])
    if rep.paths and footer["pair_digest"] != rep.pair_digest():
        raise ValueError("footer digest does not match the listed paths")
    return rep


def _finish(rep: EnumerationReport, t0: float) -> EnumerationReport:
    rep.paths.sort(key=lambda w: (w.start, w.moves))
    if rep.paths:
        rep.count = len(rep.paths)
    rep.elapsed = time.perf_counter() - t0
    return rep


# --- brute-force oracle -----------------------------------------------------------


def enumerate_dfs(b: Board, cap: int = DFS_CAP) -> EnumerationReport:
    """All hamiltonian paths by backtracking over the out-degree-2 digraph."""
    if b.size > cap:
        raise CapExceeded(f"DFS over {b.size} squares exceeds the cap of {cap}; raise --dfs-cap")
    t0 = time.perf_counter()
    size = b.size
    succ = [(b.east_table[v], b.north_table[v]) for v in range(size)]
    pred = [[] for _ in range(size)]
    for v in range(size):
        for w in set(succ[v]):
            pred[w].append(v)
    visited = bytearray(size)
    moves: List[str] = []
    found: List[Tuple[int, str]] = []
    labels = (E, N)

    def has_free_succ(z: int) -> bool:
        e, n = succ[z]
        return not visited[e] or not visited[n]

    def visit(v: int) -> int:
        # mark v and return how many squares just lost their last free successor
        visited[v] = 1
        return sum(1 for z in pred[v] if not visited[z] and not has_free_succ(z))

    def extend(cur: int, count: int, dead: int) -> None:
        if count == size:
            found.append((start, "".join(moves)))
            return
        for k in (0, 1):
            nxt = succ[cur][k]
            if visited[nxt]:
                continue
            was_dead = not has_free_succ(nxt)
            if was_dead and count + 1 != size:
                continue
            other = succ[cur][1 - k]
            # leaving cur for nxt must not strand cur's other successor
            if other != nxt and not visited[other]:
                if not any(w != cur and not visited[w] for w in pred[other]):
                    continue
            newly = visit(nxt)
            d = dead - was_dead + newly
            if d <= 1:
                moves.append(labels[k])
                extend(nxt, count + 1, d)
                moves.pop()
            visited[nxt] = 0

    rep = EnumerationReport(b, "dfs")
    for start in range(size):
        dead = visit(start)
        if dead <= 1:
            extend(start, 1, dead)
        visited[start] = 0
    for s, mv in found:
        w = Walk(b, b.square_at(s), mv)
        rep.paths.append(w)
        rep.pairs.add((w.start, w.end))
    return _finish(rep, t0)


# --- diagonal decoding enumerator --------------------------------------------------


def _terminal_partitions(b: Board):
    for d in b.diagonals:
        if d.singleton and b.m >= 3 and b.n >= 3:
            continue
        yield d


def enumerate_diagonal(
    b: Board, cap: int = DIAGONAL_CAP, walks: bool = True
) -> EnumerationReport:
    """All hamiltonian paths by decoding every admissible coordinate triple.

    Candidate initial squares are limited to east-successors of the terminal
    diagonal; for each (terminal, initial) choice every east-set is decoded
    at once by chasing successor pointers in a (2^k, mn) table.  With
    ``walks=False`` only endpoint pairs and the count are kept.
    """
    if b.m + b.n > cap:
        raise CapExceeded(f"diagonal enumeration of {b} exceeds m+n <= {cap}")
    if b.m < 3 or b.n < 3:
        rep = enumerate_dfs(b, cap=max(DFS_CAP, b.size))
        rep.method = "diagonal"
        return rep
    t0 = time.perf_counter()
    rep = EnumerationReport(b, "diagonal")
    size = b.size
    sent = size
    east_t = np.array(b.east_table + (sent,), dtype=np.int32)
    north_t = np.array(b.north_table + (sent,), dtype=np.int32)
    total = 0
    for terminal in _terminal_partitions(b):
        others = [d for d in b.diagonals if d != terminal]
        k = len(others)
        masks = np.arange(1 << k, dtype=np.int64)
        base = np.empty((1 << k, size + 1), dtype=np.int32)
        base[:, sent] = sent
        for bit, d in enumerate(others):
            goes_east = ((masks >> bit) & 1).astype(bool)
            for s in d.members:
                v = b.index(s)
                base[:, v] = np.where(goes_east, east_t[v], north_t[v])
        for tau in terminal.members:
            t = b.index(tau)
            for pre in terminal.members:
                iota = b.east(pre)
                spec0 = PathSpec(iota, tau)
                tmap = decode_travel_map(b, spec0)
                table = base.copy()
                for s in terminal.members:
                    v = b.index(s)
                    table[:, v] = sent if s == tau else (east_t[v] if tmap[s] == E else north_t[v])
                ok = _chase(table, b.index(iota), t, size)
                if not len(ok):
                    continue
                total += len(ok)
                rep.pairs.add((iota, tau))
                if walks:
                    for mask in ok:
                        east = frozenset(d.lo for bit, d in enumerate(others) if (int(mask) >> bit) & 1)
                        w = decode(b, PathSpec(iota, tau, east))
                        if w is None:
                            raise AssertionError(f"vectorised decode disagrees on {iota}->{tau} {sorted(east)}")
                        rep.paths.append(w)
    rep.count = total
    return _finish(rep, t0)


def _chase(table: np.ndarray, start: int, target: int, size: int) -> np.ndarray:
    """Rows of ``table`` whose pointer chain from ``start`` ends at ``target`` after size-1 steps."""
    width = table.shape[1]
    rows = np.arange(table.shape[0], dtype=np.int64)
    flat = table.ravel()
    pos = np.full(len(rows), start, dtype=np.int64)
    sent = size
    for step in range(1, size):
        pos = flat[rows * width + pos]
        if step % 8 == 0:
            alive = pos != sent
            if not alive.all():
                rows, pos = rows[alive], pos[alive]
                if not len(rows):
                    return rows
    return rows[pos == target]


def enumerate_paths(b: Board, method: str = "diagonal", **kw) -> EnumerationReport:
    if method == "dfs":
        return enumerate_dfs(b, **kw)
    if method == "diagonal":
        return enumerate_diagonal(b, **kw)
    raise ValueError(f"unknown enumeration method {method!r}")


# --- outer-diagonal rerouting ---------------------------------------------------


def outer_diagonals(b: Board, terminal_square: Square) -> List[int]:
    terminal = b.diagonal_of(terminal_square)
    return [d.lo for d in b.diagonals if b.classify(d, terminal) == "outer"]


def reroute_outer(w: Walk, direction: str) -> Optional[Walk]:
    """Force every outer diagonal to travel ``direction`` and decode the result."""
    if direction not in (E, N):
        raise BoardError(f"unknown move {direction!r}")
    spec = spec_of(w)
    outer = set(outer_diagonals(w.board, spec.terminal))
    east = spec.east - outer
    if direction == E:
        east |= outer
    return decode(w.board, PathSpec(spec.initial, spec.terminal, east))


def hamiltonian_cycles(paths: Iterable[Walk]) -> List[Walk]:
    return [w for w in paths if is_cycle(w)]


__all__ = [
    "CapExceeded",
    "EnumerationReport",
    "InvalidSpec",
    "PathSpec",
    "decode",
    "decode_travel_map",
    "enumerate_dfs",
    "enumerate_diagonal",
    "enumerate_paths",
    "hamiltonian_cycles",
    "is_cycle",
    "outer_diagonals",
    "read_report",
    "reroute_outer",
    "spec_of",
    "validate_spec",
    "WalkError",
    "realize",
]
