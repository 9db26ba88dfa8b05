"""Move sequences, walks, and the travel-direction view of hamiltonian paths."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional

from .board import MOVES, Board, BoardError, Diagonal, E, N, Square, board as get_board

MoveSeq = str

TravelMap = Dict[Square, str]


class WalkError(ValueError):
    """Raised when a walk is not what an operation requires."""


class MixedDiagonal(WalkError):
    """A non-terminal diagonal has squares travelling in both directions."""

    def __init__(self, diagonal: Diagonal):
        super().__init__(f"non-terminal diagonal {diagonal.label} travels both east and north")
        self.diagonal = diagonal


# --- move-sequence builders -------------------------------------------------


def seq(*parts: str) -> MoveSeq:
    """Concatenate move sequences (atoms are just ``'E'`` and ``'N'``)."""
    out = "".join(parts)
    bad = set(out) - set(MOVES)
    if bad:
        raise WalkError(f"illegal move symbols {sorted(bad)}")
    return out


def power(part: str, k: int) -> MoveSeq:
    if k < 0:
        raise WalkError(f"negative exponent {k}")
    return seq(part) * k


def blocks(template: Callable[[int], str], first: int, last: int) -> MoveSeq:
    """Concatenate ``template(i)`` for ``i = first..last`` (empty if last < first)."""
    return "".join(template(i) for i in range(first, last + 1))


def drop_last(part: str) -> MoveSeq:
    if not part:
        raise WalkError("cannot delete the last term of an empty sequence")
    return part[:-1]


# --- walks --------------------------------------------------------------------


@dataclass(frozen=True)
class Walk:
    board: Board
    start: Square
    moves: MoveSeq = ""

    def __post_init__(self):
        object.__setattr__(self, "start", self.board.check(self.start))
        seq(self.moves)

    def squares(self) -> List[Square]:
        return realize(self)

    @property
    def end(self) -> Square:
        s = self.start
        for x in self.moves:
            s = self.board.step(s, x)
        return s

    def key(self):
        return (self.board.m, self.board.n, self.start, self.moves)

    def to_json(self) -> str:
        return json.dumps(
            {"m": self.board.m, "n": self.board.n, "start": list(self.start), "moves": self.moves},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text) -> "Walk":
        obj = json.loads(text) if isinstance(text, (str, bytes)) else text
        try:
            b = get_board(int(obj["m"]), int(obj["n"]))
            return cls(b, tuple(obj["start"]), str(obj["moves"]))
        except (KeyError, TypeError) as exc:
            raise WalkError(f"malformed path record: {exc}") from None


def realize(w: Walk) -> List[Square]:
    out = [w.start]
    s = w.start
    step = w.board.step
    for x in w.moves:
        s = step(s, x)
        out.append(s)
    return out


def is_hamiltonian(w: Walk) -> bool:
    b = w.board
    if len(w.moves) != b.size - 1:
        return False
    return len(set(realize(w))) == b.size


def require_hamiltonian(w: Walk) -> None:
    if not is_hamiltonian(w):
        raise WalkError(f"walk from {w.start} on {w.board} is not a hamiltonian path")


def invert(w: Walk) -> Walk:
    """Rotate a hamiltonian path by 180 degrees; it then runs backwards."""
    require_hamiltonian(w)
    return Walk(w.board, w.board.inverse(w.end), w.moves[::-1])


_SWAP = str.maketrans({E: N, N: E})


def transpose(w: Walk) -> Walk:
    require_hamiltonian(w)
    return Walk(w.board, w.board.transpose(w.start), w.moves.translate(_SWAP))


def travel_map(w: Walk) -> TravelMap:
    require_hamiltonian(w)
    return dict(zip(realize(w), w.moves))


def walk_from_travel_map(b: Board, start: Square, tmap: TravelMap) -> Optional[Walk]:
    """Follow ``tmap`` from ``start``; a Walk only if it covers the board."""
    moves = []
    seen = {start}
    s = start
    while s in tmap:
        x = tmap[s]
        moves.append(x)
        s = b.step(s, x)
        if s in seen:
            return None
        seen.add(s)
    if len(seen) != b.size:
        return None
    return Walk(b, start, "".join(moves))


def east_set(w: Walk) -> FrozenSet[int]:
    """Lower indices of the non-terminal diagonals that travel east."""
    tmap = travel_map(w)
    b = w.board
    terminal = b.diagonal_of(w.end)
    east = set()
    for d in b.diagonals:
        if d == terminal:
            continue
        dirs = {tmap[s] for s in d.members}
        if len(dirs) > 1:
            raise MixedDiagonal(d)
        if dirs == {E}:
            east.add(d.lo)
    return frozenset(east)


def travels(tmap: TravelMap, s: Square, move: str) -> bool:
    return tmap.get(s) == move


def squares_of(walks: Iterable[Walk]) -> List[List[Square]]:
    return [realize(w) for w in walks]
