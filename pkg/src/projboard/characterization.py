"""Closed-form descriptions of which squares and square pairs are path endpoints.

Every predicate reports the labels of the clauses that matched so a
disagreement with an enumerator can be traced to a single clause.  Clause
labels follow the theorem numbering of the source results (``init(5)``,
``term(2)``, ``from0q(b)``, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Set, Tuple

from .board import Board, BoardError, Square

Pair = Tuple[Square, Square]


@dataclass(frozen=True)
class EndpointResult:
    square: Square
    clauses: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return bool(self.clauses)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"square": list(self.square), "clauses": list(self.clauses)}


def _require_big(b: Board) -> None:
    if not b.m >= b.n >= 3:
        raise BoardError(f"needs m >= n >= 3, got {b}; use n1_pairs/n2_pairs for thin boards")


def initial_square(b: Board, s: Square) -> EndpointResult:
    _require_big(b)
    p, q = b.check(s)
    m, n = b.m, b.n
    hits = []
    if p == 0 and b.nf_minus <= q <= n - 1:
        hits.append("init(1)")
    if b.nf_minus <= p <= m - 1 and q == 0:
        hits.append("init(2)")
    if b.mf_plus <= p <= m - 1 and q == b.nf:
        hits.append("init(3)")
    if 0 <= p <= b.nf and q == b.nf_minus:
        hits.append("init(4)")
    if b.mf <= p <= m - b.nf_plus and b.nf + 1 <= q <= n - 1:
        hits.append("init(5)")
    if b.nf_minus <= p <= b.mf_minus and 0 <= q <= b.nf:
        hits.append("init(6)")
    return EndpointResult((p, q), tuple(hits))


def terminal_square(b: Board, s: Square) -> EndpointResult:
    _require_big(b)
    x, y = b.check(s)
    m, n = b.m, b.n
    hits = []
    if x == m - 1 and 0 <= y <= b.nf:
        hits.append("term(1)")
    if 0 <= x <= m - b.nf_plus and y == n - 1:
        hits.append("term(2)")
    if 0 <= x <= b.mf - 1 and y == b.nf_minus:
        hits.append("term(3)")
    if m - b.nf - 1 <= x <= m - 1 and y == b.nf:
        hits.append("term(4)")
    if b.nf_minus <= x <= b.mf_minus and 0 <= y <= b.nf_minus - 1:
        hits.append("term(5)")
    if b.mf <= x <= m - b.nf_plus and b.nf_minus <= y <= n - 1:
        hits.append("term(6)")
    return EndpointResult((x, y), tuple(hits))


def initial_squares(b: Board) -> Set[Square]:
    return {s for s in b.squares() if initial_square(b, s)}


def terminal_squares(b: Board) -> Set[Square]:
    return {s for s in b.squares() if terminal_square(b, s)}


def tau_plus_e_form(b: Board) -> Set[Square]:
    """Every square that can arise as (southeast corner of S_b) E."""
    if b.m < b.n:
        raise BoardError(f"needs m >= n, got {b}")
    out = {(0, q) for q in range(1, b.n)}
    if b.m != b.n:
        lo = (b.m + b.n) // 2  # ceil((m+n-1)/2)
        out |= {(p, 0) for p in range(lo, b.m)}
    return out


def from_0q(b: Board, q: int) -> Set[Square]:
    """Terminal squares of paths starting at (0, q)."""
    _require_big(b)
    if not 1 <= q <= b.n - 1:
        raise BoardError(f"q={q} outside 1..{b.n - 1}")
    out = set()
    if q - 1 >= b.nf_minus:
        for x in range(b.nf_minus, b.mf_minus + 1):
            y = q - 1 - x
            if b.contains((x, y)):
                out.add((x, y))
    if q >= b.nf_minus:
        for x in range(b.mf, b.m - b.nf_plus + 1):
            y = b.m + b.n - q - 2 - x
            if b.contains((x, y)):
                out.add((x, y))
    return out


def from_p0_small(b: Board, p: int) -> Set[Square]:
    """Terminal squares of paths from (p, 0), p small, with all inner diagonals east."""
    _require_big(b)
    hi = (b.m + b.n) // 2 - 1
    if not 1 <= p <= hi:
        raise BoardError(f"p={p} outside 1..{hi}")
    out = set()
    if p - 1 >= b.nf_minus:
        y = b.nf_minus
        x = p - 1 - y
        if b.contains((x, y)):
            out.add((x, y))
    if b.nf_minus <= p <= b.n - 1:
        y = b.nf
        x = b.m + b.n - p - 2 - y
        if b.contains((x, y)):
            out.add((x, y))
    return out


def from_p0_large(b: Board, p: int) -> Set[Square]:
    """Terminal squares of paths from (p, 0) with p >= floor((m+n)/2); needs m > n."""
    _require_big(b)
    if b.m == b.n:
        raise BoardError("large-p starts exist only on oblong boards (m > n)")
    lo = (b.m + b.n) // 2
    if not lo <= p <= b.m - 1:
        raise BoardError(f"p={p} outside {lo}..{b.m - 1}")
    m, n = b.m, b.n
    middle = 2 * p == m + n - 1
    out = set()
    if not middle:
        for x in range(m - p + b.nf_minus, b.mf_minus + 1):
            y = m + n - p - 2 - x
            if b.contains((x, y)):
                out.add((x, y))
    for x in range(b.mf, p - b.nf_plus + 1):
        y = p - 1 - x
        if b.contains((x, y)):
            out.add((x, y))
    if middle:
        out.add((b.mf_minus, b.nf_minus))
    return out


def admissible_pairs(b: Board) -> Set[Pair]:
    """All (initial, terminal) pairs joined by some hamiltonian path, m >= n >= 3."""
    _require_big(b)
    base: Set[Pair] = set()
    for q in range(1, b.n):
        base |= {((0, q), t) for t in from_0q(b, q)}
    for p in range(1, (b.m + b.n) // 2):
        base |= {((p, 0), t) for t in from_p0_small(b, p)}
    if b.m > b.n:
        for p in range((b.m + b.n) // 2, b.m):
            base |= {((p, 0), t) for t in from_p0_large(b, p)}
    inv = b.inverse
    return base | {(inv(t), inv(i)) for i, t in base}


def n1_pairs(m: int) -> Set[Pair]:
    """m x 1 boards: the path runs once around the single row."""
    if m < 1:
        raise BoardError("m must be positive")
    return {(((x + 1) % m, 0), (x, 0)) for x in range(m)}


N2_ROWS = ("A2", "B2", "C2", "D2", "E2", "F2", "G2", "H2", "I2", "J2")


def n2_row(m: int, row: str) -> Set[Pair]:
    """Endpoint pairs of one family in the m x 2 table."""
    if m < 2:
        raise BoardError("m x 2 tables need m >= 2")
    from .board import board

    b = board(m, 2)
    mf, mf_minus, mf_plus = b.mf, b.mf_minus, b.mf_plus
    out: Set[Pair] = set()
    if row == "A2":
        out = {(s, b.east_inv(s)) for s in b.squares()}
    elif row == "B2":
        out = {((0, 1), (0, 0))}
    elif row == "C2":
        out = {((1, 0), (m - 2, 1))} if m >= 2 else set()
    elif row == "D2":
        out = {((m - 1, 1), (m - 1, 0))}
    elif row == "E2":
        if m >= 3:
            out = {((0, 1), (m - 2, 1))}
    elif row == "F2":
        if m % 2 == 1:
            out = {((1, 0), (m - 1, 0))}
    elif row == "G2":
        if m >= 4:
            out = {((1, 0), (m - 1, 0))}
    elif row == "H2":
        if m >= 4:
            out = {((p, 1), (m - 2 - p, 1)) for p in range(mf_plus, m - 1)}
    elif row == "I2":
        if m >= 4:
            out = {((p, 0), (m - p, 0)) for p in range(mf_plus + 1, m)}
    elif row == "J2":
        if m >= 5:
            banned = {1, mf, mf + 1} - {mf_minus}
            out = {((p, 0), (p - 2, 1)) for p in range(2, m) if p not in banned}
    else:
        raise BoardError(f"unknown m x 2 family {row!r}")
    return {pr for pr in out if b.contains(pr[0]) and b.contains(pr[1])}


def n2_pairs(m: int) -> Set[Pair]:
    out: Set[Pair] = set()
    for row in N2_ROWS:
        out |= n2_row(m, row)
    return out


def endpoint_pairs(b: Board) -> Set[Pair]:
    """Predicted endpoint pairs for any board size (transposing if n > m)."""
    if b.n == 1:
        return n1_pairs(b.m)
    if b.m == 1:
        return {((0, (y + 1) % b.n), (0, y)) for y in range(b.n)} if b.n > 1 else {((0, 0), (0, 0))}
    if b.n == 2 and b.m >= 2:
        return n2_pairs(b.m)
    if b.m == 2:
        return {((q, p), (y, x)) for (p, q), (x, y) in n2_pairs(b.n)}
    if b.m >= b.n:
        return admissible_pairs(b)
    from .board import board

    t = board(b.n, b.m)
    return {((q, p), (y, x)) for (p, q), (x, y) in admissible_pairs(t)}


def clause_table(b: Board, mode: str) -> List[EndpointResult]:
    fn = initial_square if mode == "init" else terminal_square
    return [r for r in (fn(b, s) for s in b.squares()) if r]
