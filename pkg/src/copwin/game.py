"""Exact one-cop game values by layered value iteration.

``value(c, r)`` is the number of cop moves still needed to force capture when
the cop stands on ``c``, the robber on ``r``, and the cop is to move. Round
``t`` of the iteration computes, for every cop position, the set of robber
positions from which capture is forced within ``t`` cop moves:

    W_t[c] = N[c]  union  { r : N[r] <= W_{t-1}[c'] }  for c' in N[c]

with ``W_0[c] = {c}``. A state enters at the first round that contains it, which
is its value; the rounds stop when nothing changes and whatever is left is lost
for the cop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .canon import canonical_form
from .errors import GameStateError
from .graph import Graph
from .infinity import INFINITY

__all__ = [
    "CaptureTable",
    "solve_game",
    "capture_time_by_game",
    "optimal_cop_move",
    "max_capture_time",
]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CaptureTable:
    graph: Graph = field(repr=False)
    value: tuple  # value[c][r]: int or INFINITY
    rounds: int  # number of rounds until the iteration became stationary
    _win: tuple = field(repr=False)  # _win[t][c]: robber mask captured within t moves

    def __call__(self, c: int, r: int):
        return self.value[c][r]

    def iterate(self, t: int) -> tuple:
        """The ``t``-th value iterate, ``min(value, t)`` pointwise."""
        if t < 0:
            raise ValueError("iterate index must be non-negative")
        return tuple(tuple(v if v is not INFINITY and v <= t else t for v in row) for row in self.value)

    def best_cop_move(self, c: int, r: int) -> int:
        return optimal_cop_move(self, c, r)


def solve_game(g: Graph) -> CaptureTable:
    n = g.n
    closed = [g.closed(v) for v in range(n)]
    win = [tuple(1 << c for c in range(n))]
    while True:
        prev = win[-1]
        lost = []
        for c in range(n):
            w = prev[c]
            m = 0
            for r in range(n):
                if closed[r] & ~w == 0:
                    m |= 1 << r
            lost.append(m)
        cur = []
        for c in range(n):
            m = closed[c]
            for c2 in _bits(closed[c]):
                m |= lost[c2]
            cur.append(m)
        cur = tuple(cur)
        if cur == prev:
            break
        win.append(cur)
    value = [[INFINITY] * n for _ in range(n)]
    for t in range(len(win) - 1, -1, -1):
        for c in range(n):
            for r in _bits(win[t][c]):
                value[c][r] = t
    return CaptureTable(
        graph=g,
        value=tuple(tuple(row) for row in value),
        rounds=len(win) - 1,
        _win=tuple(win),
    )


def capture_time_by_game(g: Graph, table: CaptureTable | None = None):
    if table is None:
        table = solve_game(g)
    if g.n == 1:
        return 0
    best = INFINITY
    for c in range(g.n):
        worst = max(table.value[c])
        if worst < best:
            best = worst
    return best


def optimal_cop_move(t: CaptureTable, c: int, r: int) -> int:
    """Smallest-index move in ``N[c]`` that attains the optimal value."""
    g = t.graph
    g._check(c)
    g._check(r)
    v = t.value[c][r]
    if c == r:
        raise GameStateError("robber is already captured")
    if v is INFINITY:
        raise GameStateError(f"cop cannot force capture from state ({c}, {r})")
    for c2 in _bits(g.closed(c)):
        if c2 == r:
            return c2
        # every robber reply must leave a state of value at most v - 1
        if g.closed(r) & ~t._win[v - 1][c2] == 0:
            return c2
    raise AssertionError("value table is inconsistent")


def max_capture_time(n: int, graphs: Iterable[Graph]) -> tuple[int, list[bytes]]:
    """Largest finite capture time among ``graphs`` (all of order ``n``) and the
    sorted canonical forms of the graphs attaining it."""
    best = -1
    forms = set()
    seen = False
    for g in graphs:
        seen = True
        if g.n != n:
            raise ValueError(f"graph of order {g.n} in a stream of order {n}")
        ct = capture_time_by_game(g)
        if ct is INFINITY or ct < best:
            continue
        if ct > best:
            best = ct
            forms = set()
        forms.add(canonical_form(g))
    if not seen:
        raise ValueError("empty graph stream")
    if best < 0:
        raise ValueError("no cop-win graph in the stream")
    return best, sorted(forms)
