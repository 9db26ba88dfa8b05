"""The m x n projective checkerboard digraph.

Squares are plain ``(p, q)`` tuples: ``p`` is the column (grows eastward),
``q`` the row (grows northward).  Every square has exactly two out-arcs,
one to its east neighbour and one to its north neighbour; stepping off the
east or north edge re-enters on the opposite edge with the other coordinate
reflected, which is the usual projective-plane gluing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Tuple

Square = Tuple[int, int]

E = "E"
N = "N"
MOVES = (E, N)


class BoardError(ValueError):
    """Raised for squares, indices or operations that do not fit the board."""


@dataclass(frozen=True)
class Diagonal:
    """A direction-forcing diagonal ``S_lo | S_hi`` (``lo + hi == m + n - 3``).

    The corner square ``(m-1, n-1)`` forms the singleton diagonal, stored with
    ``lo == hi == m + n - 2``.  ``members`` lists the squares in orbit order
    under ``sigma -> sigma N E^-1``, starting at the southeasternmost square of
    ``S_hi``.
    """

    lo: int
    hi: int
    members: Tuple[Square, ...] = field(compare=False, repr=False)
    singleton: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self._position

    def __iter__(self) -> Iterator[Square]:
        return iter(self.members)

    @cached_property
    def _position(self) -> dict:
        return {s: k for k, s in enumerate(self.members)}

    def position(self, s: Square) -> int:
        """Offset of ``s`` in :attr:`members`."""
        try:
            return self._position[s]
        except KeyError:
            raise BoardError(f"{s} is not on diagonal {self.label}") from None

    @property
    def label(self) -> str:
        if self.singleton:
            return f"D{self.lo}"
        return f"S{self.lo}|S{self.hi}"


@dataclass(frozen=True)
class Board:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise BoardError(f"board dimensions must be positive, got {self.m}x{self.n}")

    # half-size constants, named after floor(m/2), floor((m-1)/2), ceil(m/2)
    @property
    def mf(self) -> int:
        return self.m // 2

    @property
    def mf_minus(self) -> int:
        return (self.m - 1) // 2

    @property
    def mf_plus(self) -> int:
        return (self.m + 1) // 2

    @property
    def nf(self) -> int:
        return self.n // 2

    @property
    def nf_minus(self) -> int:
        return (self.n - 1) // 2

    @property
    def nf_plus(self) -> int:
        return (self.n + 1) // 2

    @property
    def size(self) -> int:
        return self.m * self.n

    @property
    def top(self) -> int:
        """Largest subdiagonal index, ``m + n - 2``."""
        return self.m + self.n - 2

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"

    # --- squares -------------------------------------------------------

    def squares(self) -> Iterator[Square]:
        for q in range(self.n):
            for p in range(self.m):
                yield (p, q)

    def contains(self, s) -> bool:
        try:
            p, q = s
        except (TypeError, ValueError):
            return False
        return 0 <= p < self.m and 0 <= q < self.n

    def check(self, s) -> Square:
        if not self.contains(s):
            raise BoardError(f"{s!r} is not a square of the {self} board")
        return (int(s[0]), int(s[1]))

    def index(self, s: Square) -> int:
        return s[1] * self.m + s[0]

    def square_at(self, k: int) -> Square:
        q, p = divmod(k, self.m)
        return (p, q)

    # --- arcs ----------------------------------------------------------

    def east(self, s: Square) -> Square:
        p, q = s
        if p < self.m - 1:
            return (p + 1, q)
        return (0, self.n - 1 - q)

    def north(self, s: Square) -> Square:
        p, q = s
        if q < self.n - 1:
            return (p, q + 1)
        return (self.m - 1 - p, 0)

    def east_inv(self, s: Square) -> Square:
        p, q = s
        if p > 0:
            return (p - 1, q)
        return (self.m - 1, self.n - 1 - q)

    def north_inv(self, s: Square) -> Square:
        p, q = s
        if q > 0:
            return (p, q - 1)
        return (self.m - 1 - p, self.n - 1)

    def step(self, s: Square, move: str) -> Square:
        if move == E:
            return self.east(s)
        if move == N:
            return self.north(s)
        raise BoardError(f"unknown move {move!r}")

    def step_inv(self, s: Square, move: str) -> Square:
        if move == E:
            return self.east_inv(s)
        if move == N:
            return self.north_inv(s)
        raise BoardError(f"unknown move {move!r}")

    @cached_property
    def east_table(self) -> Tuple[int, ...]:
        return tuple(self.index(self.east(self.square_at(k))) for k in range(self.size))

    @cached_property
    def north_table(self) -> Tuple[int, ...]:
        return tuple(self.index(self.north(self.square_at(k))) for k in range(self.size))

    # --- symmetries ----------------------------------------------------

    def inverse(self, s: Square) -> Square:
        """180-degree rotation."""
        return (self.m - 1 - s[0], self.n - 1 - s[1])

    def transpose(self, s: Square) -> Square:
        if self.m != self.n:
            raise BoardError(f"transpose needs a square board, got {self}")
        return (s[1], s[0])

    # --- diagonals -----------------------------------------------------

    def subdiagonal(self, i: int) -> Tuple[Square, ...]:
        """Squares with ``p + q == i``, listed from the southeast end."""
        if not 0 <= i <= self.top:
            raise BoardError(f"subdiagonal index {i} outside 0..{self.top}")
        p_hi = min(i, self.m - 1)
        p_lo = max(0, i - (self.n - 1))
        return tuple((p, i - p) for p in range(p_hi, p_lo - 1, -1))

    def tau_plus(self, b: int) -> Square:
        """Southeasternmost square of ``S_b``."""
        return self.subdiagonal(b)[0]

    def nw_step(self, s: Square) -> Square:
        """``s N E^-1``: one step along a diagonal orbit."""
        return self.east_inv(self.north(s))

    def se_step(self, s: Square) -> Square:
        """``s E N^-1``: the reverse orbit step."""
        return self.north_inv(self.east(s))

    @cached_property
    def diagonals(self) -> Tuple[Diagonal, ...]:
        """All diagonals by ascending lower index, the corner singleton last."""
        out = []
        k = self.m + self.n - 3
        for a in range(0, k // 2 + 1):
            b = k - a
            start = self.tau_plus(b)
            orbit = [start]
            s = self.nw_step(start)
            while s != start:
                orbit.append(s)
                s = self.nw_step(s)
            out.append(Diagonal(a, b, tuple(orbit)))
        corner = (self.m - 1, self.n - 1)
        out.append(Diagonal(self.top, self.top, (corner,), singleton=True))
        return tuple(out)

    @cached_property
    def _diag_of(self) -> dict:
        table = {}
        for d in self.diagonals:
            for s in d.members:
                table[s] = d
        return table

    def diagonal_of(self, s: Square) -> Diagonal:
        try:
            return self._diag_of[s]
        except KeyError:
            raise BoardError(f"{s!r} is not a square of the {self} board") from None

    def diagonal(self, lo: int) -> Diagonal:
        """Diagonal identified by its lower index (``m + n - 2`` for the corner)."""
        for d in self.diagonals:
            if d.lo == lo:
                return d
        raise BoardError(f"no diagonal with lower index {lo} on the {self} board")

    def is_rowful(self, d: Diagonal) -> bool:
        if d.singleton:
            raise BoardError("the corner singleton has no rowful status")
        return self.n - 1 <= d.lo and d.hi <= self.m - 2

    def classify(self, d: Diagonal, terminal: Diagonal) -> str:
        """``'terminal'``, ``'inner'`` or ``'outer'`` relative to ``terminal``."""
        if terminal.singleton:
            raise BoardError("the corner singleton cannot serve as terminal diagonal here")
        if d.lo == terminal.lo:
            return "terminal"
        if d.singleton or d.lo > terminal.lo:
            return "inner"
        return "outer"

    def u_index(self, d: Diagonal, tau: Square, s: Square) -> int:
        """The ``u`` in ``1..|d|`` with ``s == tau (N E^-1)^u``."""
        if d.singleton:
            raise BoardError("u-index is defined on non-singleton diagonals")
        k = (d.position(s) - d.position(tau)) % len(d)
        return k or len(d)

    def v_index(self, d: Diagonal, base: Square, s: Square) -> int:
        """The ``v`` in ``1..|d|`` with ``s == base (E N^-1)^v``."""
        if d.singleton:
            raise BoardError("v-index is defined on non-singleton diagonals")
        k = (d.position(base) - d.position(s)) % len(d)
        return k or len(d)


@lru_cache(maxsize=None)
def board(m: int, n: int) -> Board:
    """Shared board instance (boards are immutable, so caching is safe)."""
    return Board(m, n)
