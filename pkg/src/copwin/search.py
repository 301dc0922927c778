"""Realizability census, minimality checks and the constructive operations.

A census lists, up to isomorphism, the connected graphs with a given rank
cardinality vector (optionally restricted by top-heaviness). Two routes lead
there and are cross-checked in the test-suite:

* ``enumeration``: rank every connected class of order ``sum(v)`` and filter.
* ``layered``: a realizer ``G`` of ``(x_a, ..., x_2, x_1)`` is its level graph
  ``G^(2)``, which realizes ``(x_a, ..., x_2)``, plus ``x_1`` new vertices that
  are precisely the strict corners of ``G``. Attaching new vertices to each
  prefix realizer in every possible way and keeping the graphs whose strict
  corners are exactly the new vertices therefore finds every realizer.

Small sums use enumeration; larger sums recurse through the layered route.
The layered route tries every edge set among the new vertices, so a large last
entry makes it expensive; such layers fall back to enumeration while the order
is small enough, and raise :class:`ResourceCapError` otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .canon import _canonical, canonical_form, certificate
from .enumerate import DEFAULT_CAP, _canonical_adj, enumerate_with_forms
from .errors import NotCopWinError, ResourceCapError
from .graph import Graph
from .infinity import INFINITY
from .rank import (
    CornerRanking,
    TopHeaviness,
    corner_rank,
    rank_levels,
    strict_corners_in,
)
from .vectors import RankVector, _vec, predecessors

__all__ = [
    "RealizationCensus",
    "MinimalityVerdict",
    "census",
    "check_minimal",
    "add_twin",
    "extend_tail",
    "truncate",
    "parse_filter",
]

# sums up to this value are censused by filtering the full enumeration
DIRECT_LIMIT = 8
HARD_CAP = 10
# candidate graphs the layered route may try for one layer before giving up on it
LAYER_BUDGET = 500_000
# largest order at which enumeration stands in for an over-budget layer
ENUMERATION_FALLBACK = 9

FILTERS = ("any", "top0", "top1")


def parse_filter(r) -> str:
    """Accept ``0``, ``1``, ``'any'``, ``'Top0'`` and similar spellings."""
    if r is None:
        return "any"
    if isinstance(r, TopHeaviness):
        r = r.value
    s = str(r).strip().lower()
    table = {"any": "any", "0": "top0", "1": "top1", "top0": "top0", "top1": "top1"}
    if s not in table:
        raise ValueError(f"unknown top-heaviness filter {r!r}")
    return table[s]


@dataclass(frozen=True)
class RealizationCensus:
    vector: RankVector
    r_filter: str
    realizers: tuple[Graph, ...]
    forms: tuple[bytes, ...] = field(repr=False)
    exhaustive: bool = True
    method: str = "enumeration"

    @property
    def count(self) -> int:
        return len(self.realizers)


def _top_class(adj, n, levels):
    """TopHeaviness from level masks (finite rank)."""
    a = len(levels)
    if a == 1:
        return "clique"
    below = 0
    for m in levels[a - 2:]:
        below |= m
    hits = [below & ~(adj[v] | (1 << v)) == 0 for v in _bits(levels[a - 1])]
    if any(hits) != all(hits):
        raise AssertionError("top-heaviness equivalence violated")
    return "top1" if hits[0] else "top0"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _matches(cls, filt):
    if cls == "clique":
        return filt == "any"
    return filt == "any" or filt == cls


@lru_cache(maxsize=None)
def _index(n: int, cap: int):
    """Map ``(entries, top class)`` to the sorted forms/adjacencies of order n."""
    out = {}
    for key, g in enumerate_with_forms(n, cap):
        levels, inf = rank_levels(g.adj, n)
        if inf:
            continue
        vec = tuple(m.bit_count() for m in reversed(levels))
        out.setdefault((vec, _top_class(g.adj, n, levels)), []).append((key, g.adj))
    return out


def _direct(entries, filt, cap):
    n = sum(entries)
    idx = _index(n, max(cap, n))
    rows = []
    for cls in ("clique", "top0", "top1"):
        if _matches(cls, filt):
            rows.extend(idx.get((entries, cls), ()))
    return sorted(rows)


def _extend(hadj, h, m):
    """Graphs of order h + m whose strict corners are exactly the m new vertices,
    and whose remaining part is the graph ``hadj``. Yields adjacency lists."""
    n = h + m
    new_mask = ((1 << n) - 1) & ~((1 << h) - 1)
    closed = [hadj[v] | (1 << v) for v in range(h)]
    # old pairs (a, b) with N[a] strictly inside N[b]: some new vertex must
    # see a and miss b, or a stays a strict corner
    need = []
    for a in range(h):
        for b in _bits(hadj[a]):
            if closed[a] & ~closed[b] == 0 and closed[a] != closed[b]:
                need.append((1 << a, 1 << b))
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    full = (1 << n) - 1
    for subsets in itertools.combinations_with_replacement(range(1 << h), m):
        if any(not any(s & a and not s & b for s in subsets) for a, b in need):
            continue
        base = list(hadj) + [0] * m
        for i, s in enumerate(subsets):
            v = h + i
            base[v] = s
            for u in _bits(s):
                base[u] |= 1 << v
        for e in range(1 << len(pairs)):
            adj = list(base)
            for bit, (i, j) in enumerate(pairs):
                if e >> bit & 1:
                    adj[h + i] |= 1 << (h + j)
                    adj[h + j] |= 1 << (h + i)
            if strict_corners_in(adj, full) == new_mask:
                yield adj


def _layer_cost(rows, h, m):
    return len(rows) * math.comb((1 << h) + m - 1, m) * (1 << (m * (m - 1) // 2))


@lru_cache(maxsize=None)
def _census_rows(entries: tuple, filt: str, cap: int, direct_limit: int):
    """``(method, rows)`` with rows the sorted ``(form, canonical adjacency)``
    pairs; cliques are realizers of length-1 vectors here."""
    n = sum(entries)
    if n <= direct_limit:
        return "enumeration", tuple(_direct(entries, filt, cap))
    if len(entries) == 1:
        k = entries[0]
        adj = tuple(((1 << k) - 1) & ~(1 << v) for v in range(k))
        return "layered", (((certificate(k, _canonical(adj, k)[0]), adj),) if filt == "any" else ())
    prefix = entries[:-1]
    m = entries[-1]
    # top-heaviness of G and of G^(2) agree once G^(2) itself has rank >= 2
    sub_filt = filt if len(prefix) >= 2 else "any"
    _, rows = _census_rows(prefix, sub_filt, cap, direct_limit)
    h = n - m
    cost = _layer_cost(rows, h, m)
    if cost > LAYER_BUDGET:
        if n <= min(cap, ENUMERATION_FALLBACK):
            return "enumeration", tuple(_direct(entries, filt, cap))
        raise ResourceCapError(
            f"census of {RankVector(entries)} would try about {cost:.2e} graphs in its last layer"
        )
    found = {}
    for _, hadj in rows:
        for adj in _extend(hadj, h, m):
            if len(prefix) == 1:
                levels = [((1 << n) - 1) & ~((1 << h) - 1), (1 << h) - 1]
                if not _matches(_top_class(adj, n, levels), filt):
                    continue
            code, order = _canonical(adj, n)
            key = certificate(n, code)
            if key not in found:
                found[key] = _canonical_adj(adj, n, order)
    return "layered", tuple(sorted(found.items()))


def census(v, r_filter="any", cap: int = DEFAULT_CAP, include_cliques: bool = False,
           direct_limit: int = DIRECT_LIMIT) -> RealizationCensus:
    """All connected graphs realizing ``v`` that match ``r_filter``, one per class.

    Length-1 vectors are realized only by cliques, which are excluded unless
    ``include_cliques`` is set.
    """
    v = _vec(v)
    filt = parse_filter(r_filter)
    n = v.total
    if n > cap:
        raise ResourceCapError(f"sum {n} of {v} exceeds the cap {cap}")
    if len(v) == 1 and not include_cliques:
        method, rows = "enumeration" if n <= direct_limit else "layered", ()
    else:
        method, rows = _census_rows(v.entries, filt, cap, direct_limit)
    return RealizationCensus(
        vector=v,
        r_filter=filt,
        realizers=tuple(Graph._trusted(n, adj) for _, adj in rows),
        forms=tuple(key for key, _ in rows),
        method=method,
    )


@dataclass(frozen=True)
class MinimalityVerdict:
    vector: RankVector
    r: int
    minimal: bool | None  # None: no witness found but some predecessors untested
    witness: tuple | None  # (RankVector, Graph)
    sum_cap_used: int
    tested: tuple[RankVector, ...] = ()
    residual: tuple[RankVector, ...] = ()


def _witness_order(y: RankVector):
    return (y.total, len(y), y.entries)


def check_minimal(v, r: int, sum_cap: int = DEFAULT_CAP) -> MinimalityVerdict:
    """Decide r-minimality of ``v`` by censusing its proper predecessors of
    length >= 2, smallest first; stops at the first r-realizable one."""
    v = _vec(v)
    if r not in (0, 1):
        raise ValueError("r must be 0 or 1")
    if sum_cap > HARD_CAP:
        raise ResourceCapError(f"sum cap {sum_cap} exceeds the hard cap {HARD_CAP}")
    filt = "top1" if r == 1 else "top0"
    preds = sorted((y for y in predecessors(v, 2) if y != v), key=_witness_order)
    tested = []
    residual = []
    for y in preds:
        if y.total > sum_cap:
            residual.append(y)
            continue
        c = census(y, filt, cap=sum_cap)
        tested.append(y)
        if c.realizers:
            return MinimalityVerdict(v, r, False, (y, c.realizers[0]), sum_cap, tuple(tested), ())
    return MinimalityVerdict(
        vector=v,
        r=r,
        minimal=None if residual else True,
        witness=None,
        sum_cap_used=sum_cap,
        tested=tuple(tested),
        residual=tuple(residual),
    )


def _new_label(labels, base):
    if all(isinstance(x, int) for x in labels):
        return max(labels) + 1
    return f"{base}'"


def add_twin(g: Graph, v: int) -> Graph:
    """Add a vertex with the same closed neighbourhood as ``v``."""
    g._check(v)
    n = g.n
    adj = list(g.adj)
    nb = g.adj[v] | (1 << v)
    for u in _bits(nb):
        adj[u] |= 1 << n
    adj.append(nb)
    return Graph(n + 1, tuple(adj), g.labels + (_new_label(g.labels, g.labels[v]),))


def extend_tail(g: Graph, l: int) -> Graph:
    """Attach a pendant vertex to every rank-1 vertex, ``l`` times over."""
    if l < 0:
        raise ValueError("l must be non-negative")
    for _ in range(l):
        levels, inf = rank_levels(g.adj, g.n)
        if inf:
            raise NotCopWinError("extend_tail needs a cop-win graph")
        if g.n == 1:
            # K1 plus a pendant is K2, which has rank 1 again
            raise ValueError("extend_tail is undefined on the one-vertex graph")
        adj = list(g.adj)
        labels = list(g.labels)
        for v in _bits(levels[0]):
            w = len(adj)
            adj[v] |= 1 << w
            adj.append(1 << v)
            labels.append(_new_label(labels, labels[v]))
        g = Graph(len(adj), tuple(adj), tuple(labels))
    return g


def truncate(g: Graph, r: CornerRanking, k: int) -> Graph:
    """The level graph ``G^(k)``."""
    if r.alpha is INFINITY:
        if not 1 <= k <= len(r.levels):
            raise ValueError(f"k={k} outside the finite levels")
    elif not 1 <= k <= r.alpha:
        raise ValueError(f"k={k} outside 1..{r.alpha}")
    return r.level_graph(k)[0]
