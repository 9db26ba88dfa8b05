"""Explicit hamiltonian paths: the all-north families, the m x (m-2) special
path, and the thin-board (n = 1, 2) families.

Each builder first realizes a printed closed-form move sequence where one
exists.  If that sequence does not validate, the path is recovered from its
coordinates with :func:`projboard.decoder.decode`, which is unique when it
exists, and the fallback is recorded in the optional ``log`` list.  Nothing
unvalidated is ever returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from .board import Board, Square, board as get_board
from .characterization import N2_ROWS, n2_row
from .decoder import PathSpec, decode
from .walk import E, N, Walk, WalkError, blocks, drop_last, east_set, is_hamiltonian, power, seq

log = logging.getLogger(__name__)


class HypothesisViolation(ValueError):
    pass


class ConstructionInvalid(RuntimeError):
    pass


class ConstructionImpossible(RuntimeError):
    pass


@dataclass
class LogEntry:
    kind: str
    board: str
    params: dict
    literal_attempt: str  # pass | fail | skipped
    source: str  # literal | decoder
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "board": self.board,
            "params": self.params,
            "literalAttempt": self.literal_attempt,
            "source": self.source,
            "note": self.note,
        }


def sigma_a(b: Board, a: int) -> Square:
    return (b.mf_minus, a - b.mf_minus)


def sigma_b(b: Board, bb: int) -> Square:
    return (b.mf, bb - b.mf)


def _check(w: Walk, start: Square, end: Square, all_north: bool) -> Optional[str]:
    if not is_hamiltonian(w):
        return "not hamiltonian"
    if w.start != start or w.end != end:
        return f"runs {w.start}->{w.end}, wanted {start}->{end}"
    if all_north and east_set(w):
        return f"east-set {sorted(east_set(w))} is not empty"
    return None


def _record(out, entry: LogEntry) -> None:
    if entry.source == "decoder":
        log.info("%s on %s %s: literal %s (%s); using decoder", entry.kind, entry.board,
                 entry.params, entry.literal_attempt, entry.note)
    if out is not None:
        out.append(entry)


def _literal_or_decode(kind, b, params, literal, start, end, out) -> Walk:
    try:
        w = Walk(b, start, literal())
        problem = _check(w, start, end, all_north=True)
    except WalkError as exc:
        problem = str(exc)
    if problem is None:
        _record(out, LogEntry(kind, str(b), params, "pass", "literal"))
        return w
    w = decode(b, PathSpec(start, end, frozenset()))
    if w is None:
        raise ConstructionImpossible(f"{kind} on {b} {params}: no all-north path {start}->{end}")
    _record(out, LogEntry(kind, str(b), params, "fail", "decoder", problem))
    return w


# --- all-north paths from tau_+ E ---------------------------------------------


def _diag_hypotheses(b: Board, a: int) -> int:
    if not b.m >= b.n >= 3:
        raise HypothesisViolation(f"needs m >= n >= 3, got {b}")
    bb = b.m + b.n - 3 - a
    if not 0 <= a <= bb:
        raise HypothesisViolation(f"a={a} is not the lower index of a diagonal on {b}")
    if not a <= b.m - 2 <= bb:
        raise HypothesisViolation(f"need a <= m-2 <= b, got a={a}, b={bb}, m={b.m}")
    return bb


def construct_ha(b: Board, a: int, log: Optional[list] = None) -> Walk:
    """All-north path from tau_+ E to sigma_a = (floor((m-1)/2), a - floor((m-1)/2))."""
    bb = _diag_hypotheses(b, a)
    end = sigma_a(b, a)
    if not b.contains(end):
        raise HypothesisViolation(f"sigma_a={end} is off the {b} board (needs a >= {b.mf_minus})")
    n = b.n
    start = b.east(b.tau_plus(bb))
    # odd m: the middle column is N-periodic with period n, so the last run is n-1
    tail = 2 * n - 1 if b.m % 2 == 0 else n - 1
    moves = seq(power(seq(power(N, 2 * n - 1), E), b.mf_minus), power(N, tail))
    w = Walk(b, start, moves)
    problem = _check(w, start, end, all_north=True)
    if problem:
        raise ConstructionInvalid(f"H_a on {b}, a={a}: {problem}")
    if log is not None:
        log.append(LogEntry("Ha", str(b), {"a": a}, "pass", "literal",
                            "" if b.m % 2 == 0 else f"trailing run N^{tail}"))
    return w


def literal_hb(b: Board, a: int, bb: int) -> str:
    n, mf = b.n, b.mf

    def block(i):
        return seq(power(N, bb - a - 1), E, power(N, 2 * i - 1), E, power(N, n + a - bb - 2 * i + 1), E)

    head = power(seq(power(N, 2 * n - 1), E), bb - n + 1)
    if b.m % 2 == 1:
        return seq(head, blocks(block, 1, mf + n - bb - 1), power(N, bb - a - 1))
    return seq(
        head,
        blocks(block, 1, mf + n - bb - 2),
        power(N, bb - a - 1), E, power(N, n + a - bb), E, power(N, bb - a - 1),
    )


def construct_hb(b: Board, a: int, bb: int, log: Optional[list] = None) -> Walk:
    """All-north path from tau_+ E to sigma_b = (floor(m/2), b - floor(m/2))."""
    if a + bb != b.m + b.n - 3:
        raise HypothesisViolation(f"a + b must equal m + n - 3 = {b.m + b.n - 3}")
    _diag_hypotheses(b, a)
    if a == bb:
        raise HypothesisViolation("H_b needs a != b")
    if bb > b.mf + b.n - 1:
        raise HypothesisViolation(f"sigma_b is off the board (b={bb} > {b.mf + b.n - 1})")
    start = b.east(b.tau_plus(bb))
    end = sigma_b(b, bb)
    return _literal_or_decode("Hb", b, {"a": a, "b": bb}, lambda: literal_hb(b, a, bb), start, end, log)


def literal_exceptional(b: Board) -> str:
    n, nf = b.n, b.nf

    def block(i):
        return seq(E, power(N, 2 * n + 1 - 2 * i), power(E, 2), power(N, 2 * i))

    if b.m % 2 == 1:
        return seq(blocks(block, 1, nf - 1), E, power(N, n))
    return drop_last(blocks(block, 1, nf))


def exceptional_endpoints(m: int) -> Tuple[Square, Square]:
    b = get_board(m, m - 2)
    return (m - 2, 0), (b.mf - 1, b.mf_minus - 1)


def construct_exceptional(m: int, log: Optional[list] = None) -> Walk:
    """All-north path on m x (m-2) from (m-2, 0) to (floor(m/2)-1, floor((m-1)/2)-1)."""
    if m < 5:
        raise HypothesisViolation(f"the m x (m-2) path needs m >= 5, got m={m}")
    b = get_board(m, m - 2)
    start, end = exceptional_endpoints(m)
    return _literal_or_decode("Exceptional", b, {"m": m}, lambda: literal_exceptional(b), start, end, log)


# --- thin boards ----------------------------------------------------------------


def construct_n1(m: int, p: int) -> Walk:
    b = get_board(m, 1)
    start = b.check((p, 0))
    w = Walk(b, start, power(E, m - 1))
    if not is_hamiltonian(w):
        raise ConstructionInvalid(f"E^{m - 1} from {start} is not hamiltonian on {b}")
    return w


def find_path(b: Board, start: Square, end: Square) -> Optional[Walk]:
    """First decodable path start->end, trying east-sets by increasing size."""
    terminal = b.diagonal_of(end)
    if b.diagonal_of(b.east_inv(start)) != terminal:
        return None
    others = [d.lo for d in b.diagonals if d != terminal]
    for k in range(len(others) + 1):
        for east in combinations(others, k):
            w = decode(b, PathSpec(start, end, frozenset(east)))
            if w is not None:
                return w
    return None


def construct_n2(m: int, row: str, p: Optional[int] = None, q: Optional[int] = None) -> Walk:
    """A path on m x 2 realizing one row of the endpoint table.

    ``row`` is one of ``A2``..``J2``; rows with a free square take ``p``
    (and ``q`` for ``A2``).
    """
    if row not in N2_ROWS:
        raise HypothesisViolation(f"unknown m x 2 family {row!r}")
    pairs = n2_row(m, row)
    if row == "A2":
        if p is None or q is None:
            raise HypothesisViolation("row A2 needs the initial square (p, q)")
        pairs = {pr for pr in pairs if pr[0] == (p, q)}
    elif row in ("H2", "I2", "J2"):
        if p is None:
            raise HypothesisViolation(f"row {row} needs p")
        pairs = {pr for pr in pairs if pr[0][0] == p}
    if not pairs:
        raise HypothesisViolation(f"row {row} has no admissible pair for m={m}, p={p}, q={q}")
    (start, end), = pairs
    b = get_board(m, 2)
    w = find_path(b, start, end)
    if w is None:
        raise ConstructionImpossible(f"no path {start}->{end} on {b}")
    return w


def construct_canonical(b: Board, spec: PathSpec) -> Optional[Walk]:
    return decode(b, spec)


# --- completeness sweeps ------------------------------------------------------------


def all_north_terminals(b: Board, start: Square) -> set:
    """Terminal squares reachable from ``start`` by a path with empty east-set."""
    terminal = b.diagonal_of(b.east_inv(start))
    out = set()
    for tau in terminal.members:
        if b.m >= 3 and b.n >= 3 and terminal.singleton:
            continue
        if decode(b, PathSpec(start, tau, frozenset())) is not None:
            out.add(tau)
    return out


def predicted_all_north_terminals(b: Board, a: int) -> set:
    bb = b.m + b.n - 3 - a
    if not a <= b.m - 2 <= bb:
        return set()
    out = set()
    sa, sb = sigma_a(b, a), sigma_b(b, bb)
    if b.contains(sa):
        out.add(sa)
    if a != bb and b.contains(sb):
        out.add(sb)
    return out


@dataclass
class SweepResult:
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    log: List[LogEntry] = field(default_factory=list)


def construction_sweep(max_m: int = 12) -> SweepResult:
    """Build every admissible H_a, H_b and m x (m-2) path with 3 <= n <= m <= max_m."""
    res = SweepResult()
    for m in range(3, max_m + 1):
        for n in range(3, m + 1):
            b = get_board(m, n)
            for d in b.diagonals:
                if d.singleton:
                    continue
                a, bb = d.lo, d.hi
                if not a <= m - 2 <= bb:
                    continue
                start = b.east(b.tau_plus(bb))
                if b.contains(sigma_a(b, a)):
                    res.checked += 1
                    try:
                        w = construct_ha(b, a, res.log)
                        problem = _check(w, start, sigma_a(b, a), True)
                    except Exception as exc:  # noqa: BLE001 - reported as failure
                        problem = repr(exc)
                    if problem:
                        res.failures.append(f"Ha {b} a={a}: {problem}")
                if a != bb and bb <= b.mf + n - 1:
                    res.checked += 1
                    try:
                        w = construct_hb(b, a, bb, res.log)
                        problem = _check(w, start, sigma_b(b, bb), True)
                    except Exception as exc:  # noqa: BLE001
                        problem = repr(exc)
                    if problem:
                        res.failures.append(f"Hb {b} a={a} b={bb}: {problem}")
        if m >= 5:
            res.checked += 1
            try:
                w = construct_exceptional(m, res.log)
                start, end = exceptional_endpoints(m)
                problem = _check(w, start, end, True)
            except Exception as exc:  # noqa: BLE001
                problem = repr(exc)
            if problem:
                res.failures.append(f"Exceptional m={m}: {problem}")
    return res
