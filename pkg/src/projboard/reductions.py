"""Removing east-travelling rowful diagonals, and the stretch bookkeeping built on it.

A diagonal ``S_i | S_j`` is rowful when ``n-1 <= i <= j <= m-2``.  If it
travels east, its squares only shift the rest of the path sideways, so
cutting them out gives a hamiltonian path on a board that is 1 or 2 columns
narrower (and inserting them is the inverse).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .board import Board, BoardError, Diagonal, E, N, Square, board as get_board
from .decoder import InvalidSpec, PathSpec, decode, enumerate_diagonal, enumerate_dfs
from .walk import Walk, WalkError, east_set, travel_map, walk_from_travel_map


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class DeltaMap:
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            raise ReductionError(f"need i <= j, got {self.i}, {self.j}")

    @property
    def width(self) -> int:
        """Number of subdiagonals removed (1 if i == j)."""
        return len({self.i, self.j})

    def __call__(self, k: int) -> int:
        if k < 0:
            raise ReductionError(f"k={k} must be non-negative")
        return (self.i < k) + (self.j < k and self.j != self.i)

    def square(self, s: Square) -> Square:
        p, q = s
        if p + q in (self.i, self.j):
            raise ReductionError(f"{s} lies on a removed subdiagonal")
        return (p - self(p + q), q)

    def preimage(self, s: Square) -> Square:
        """The square that :meth:`square` sends to ``s`` (on the wider board)."""
        p, q = s
        for shift in (0, 1, 2):
            cand = (p + shift, q)
            if sum(cand) not in (self.i, self.j) and self(sum(cand)) == shift:
                return cand
        raise ReductionError(f"{s} has no preimage under {self}")


def delta(i: int, j: int, k: int) -> int:
    return DeltaMap(i, j)(k)


def delta_square(i: int, j: int, s: Square) -> Square:
    return DeltaMap(i, j).square(s)


def rowful_diagonals(b: Board) -> List[Diagonal]:
    return [d for d in b.diagonals if not d.singleton and b.is_rowful(d)]


def contract_rowful_east(w: Walk, d: Diagonal) -> Walk:
    """Cut an east-travelling rowful diagonal out of a hamiltonian path."""
    b = w.board
    if d.singleton or not b.is_rowful(d):
        raise ReductionError(f"{d.label} is not rowful on {b}")
    tmap = travel_map(w)
    tau = w.end
    if b.diagonal_of(tau) == d:
        raise ReductionError(f"{d.label} is the terminal diagonal")
    if d.lo not in east_set(w):
        raise ReductionError(f"{d.label} does not travel east")
    dm = DeltaMap(d.lo, d.hi)
    small = get_board(b.m - dm(b.m + b.n), b.n)
    tmap2 = {dm.square(s): x for s, x in tmap.items() if s not in d}
    start = small.east(dm.square(b.east_inv(w.start)))
    out = walk_from_travel_map(small, start, tmap2)
    if out is None or out.end != dm.square(tau):
        raise ReductionError(f"contraction of {d.label} did not give a hamiltonian path")
    return out


def expand_rowful_east(w: Walk, i: int, j: int) -> Walk:
    """Insert ``S_i | S_j`` into a path so that it travels east on the wider board."""
    dm = DeltaMap(i, j)
    small = w.board
    n = small.n
    m = small.m + dm.width
    if i + j != m + n - 3:
        raise ReductionError(f"S{i}|S{j} is not a diagonal of the {m}x{n} board")
    big = get_board(m, n)
    d = big.diagonal(i)
    if not big.is_rowful(d):
        raise ReductionError(f"S{i}|S{j} is not rowful on {big}")
    tmap2 = travel_map(w)
    tmap: Dict[Square, str] = {}
    for s in big.squares():
        if s in d:
            tmap[s] = E
        else:
            img = dm.square(s)
            if img in tmap2:
                tmap[s] = tmap2[img]
    start = big.east(dm.preimage(small.east_inv(w.start)))
    out = walk_from_travel_map(big, start, tmap)
    if out is None or out.end != dm.preimage(w.end):
        raise ReductionError(f"expansion at S{i}|S{j} did not give a hamiltonian path")
    return out


def insertion_sites(small: Board) -> List[Tuple[int, int]]:
    """Rowful diagonals that can be inserted into ``small`` (one or two columns)."""
    out = []
    for width in (1, 2):
        big = get_board(small.m + width, small.n)
        for d in rowful_diagonals(big):
            if len({d.lo, d.hi}) == width:
                out.append((d.lo, d.hi))
    return out


# --- path statistics --------------------------------------------------------------


def inner_outer(w: Walk) -> Tuple[List[Diagonal], List[Diagonal]]:
    b = w.board
    terminal = b.diagonal_of(w.end)
    inner = [d for d in b.diagonals if not d.singleton and b.classify(d, terminal) == "inner"]
    outer = [d for d in b.diagonals if not d.singleton and b.classify(d, terminal) == "outer"]
    return inner, outer


def rowful_inner_east(w: Walk, east: Optional[FrozenSet[int]] = None) -> int:
    """Number of rowful inner subdiagonals travelling east."""
    b = w.board
    east = east_set(w) if east is None else east
    inner, _ = inner_outer(w)
    return sum(len({d.lo, d.hi}) for d in inner if d.lo in east and b.is_rowful(d))


def can_go_east_holds(w: Walk) -> bool:
    """Each east-travelling inner diagonal is rowful, unless all inner ones go east."""
    b = w.board
    east = east_set(w)
    inner, _ = inner_outer(w)
    if all(d.lo in east for d in inner):
        return True
    return all(b.is_rowful(d) for d in inner if d.lo in east)


# --- stretch correspondence ------------------------------------------------------------


@dataclass(frozen=True)
class StretchParams:
    a: int
    b: int
    o: int
    e: int
    e1: int
    e2: int
    m_prime: int
    a_prime: int
    b_prime: int
    p_prime: int
    x_prime: int

    def reduced_endpoints(self, iota: Square, tau: Square) -> Tuple[Square, Square]:
        return (self.p_prime, iota[1]), (self.x_prime, tau[1])


def stretch_params(b: Board, a: int, bb: int, iota: Square, tau: Square, e: int) -> StretchParams:
    if b.m < b.n:
        raise ReductionError(f"needs m >= n, got {b}")
    if a + bb != b.m + b.n - 3 or a > bb:
        raise ReductionError(f"S{a}|S{bb} is not a diagonal of {b} with a <= b")
    p, q = b.check(iota)
    x, y = b.check(tau)
    if p + q - 1 not in (a, bb):
        raise ReductionError(f"initial square {iota} does not follow S{a}|S{bb}")
    if x + y not in (a, bb):
        raise ReductionError(f"terminal square {tau} is not on S{a}|S{bb}")
    if e < 0:
        raise ReductionError("e must be non-negative")
    o = max(a - b.n + 1, 0)
    e1 = 0 if p + q - 1 == a else e
    e2 = 0 if x + y == a else e
    return StretchParams(
        a=a, b=bb, o=o, e=e, e1=e1, e2=e2,
        m_prime=b.m - 2 * o - e,
        a_prime=a - o,
        b_prime=bb - o - e,
        p_prime=p - o - e1,
        x_prime=x - o - e2,
    )


def stretch_bound(b: Board, a: int, bb: int) -> int:
    """Number of rowful inner subdiagonals for terminal diagonal S_a | S_b."""
    return max(min(b.m - b.n, bb - a - 1), 0)


@dataclass(frozen=True)
class StretchCheck:
    exists: bool
    bound_ok: bool
    parity_ok: bool
    north_ok: bool
    east_ok: bool

    @property
    def conditions(self) -> bool:
        return self.bound_ok and self.parity_ok and (self.north_ok or self.east_ok)

    @property
    def holds(self) -> bool:
        return self.exists == self.conditions


@lru_cache(maxsize=64)
def realized_triples(m: int, n: int) -> FrozenSet[Tuple[Square, Square, int]]:
    """(initial, terminal, e) over every hamiltonian path of the board."""
    b = get_board(m, n)
    rep = enumerate_diagonal(b) if min(m, n) >= 3 else enumerate_dfs(b)
    return frozenset((w.start, w.end, rowful_inner_east(w)) for w in rep.paths)


def _reduced_path_exists(bp: Board, iota: Square, tau: Square, east_all: bool) -> bool:
    if not (bp.contains(iota) and bp.contains(tau)):
        return False
    terminal = bp.diagonal_of(tau)
    east = frozenset(d.lo for d in bp.diagonals if d != terminal) if east_all else frozenset()
    try:
        return decode(bp, PathSpec(iota, tau, east)) is not None
    except InvalidSpec:
        return False


def verify_stretch(b: Board, iota: Square, tau: Square, e: int) -> StretchCheck:
    """Evaluate both sides of the stretch equivalence for one (iota, tau, e)."""
    d = b.diagonal_of(tau)
    if d.singleton:
        raise ReductionError("terminal square must not be the corner")
    sp = stretch_params(b, d.lo, d.hi, iota, tau, e)
    exists = (iota, tau, e) in realized_triples(b.m, b.n)
    bound_ok = 0 <= e <= stretch_bound(b, d.lo, d.hi)
    parity_ok = (b.m + b.n) % 2 == 1 or e % 2 == 0
    north_ok = east_ok = False
    if sp.m_prime >= 1:
        bp = get_board(sp.m_prime, b.n)
        i2, t2 = sp.reduced_endpoints(iota, tau)
        if sp.m_prime >= b.n:
            north_ok = _reduced_path_exists(bp, i2, t2, east_all=False)
        if sp.m_prime == b.n >= d.lo + 3:
            east_ok = _reduced_path_exists(bp, i2, t2, east_all=True)
    return StretchCheck(exists, bound_ok, parity_ok, north_ok, east_ok)


def stretch_cases(b: Board, extra_e: int = 2):
    """Every admissible (iota, tau, e) for the stretch check on ``b``."""
    for d in b.diagonals:
        if d.singleton:
            continue
        top = stretch_bound(b, d.lo, d.hi) + extra_e
        inits = {s for s in b.squares() if s[0] + s[1] - 1 in (d.lo, d.hi)}
        for iota in sorted(inits):
            for tau in d.members:
                for e in range(0, top + 1):
                    yield iota, tau, e
