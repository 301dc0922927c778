"""Corner ranking, top-heaviness and rank-based capture time.

At step ``k`` the current graph ``G^(k)`` (``G^(1) = G``) is inspected: a clique
gives every remaining vertex rank ``k`` and stops; a non-clique without strict
corners gives the remaining vertices rank infinity; otherwise all strict
corners get rank ``k`` at once and are deleted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import NotCopWinError
from .graph import Graph, bfs_distances, induced_subgraph, mask_to_set
from .infinity import INFINITY
from .vectors import RankVector

__all__ = [
    "INFINITY",
    "CornerRanking",
    "TopHeaviness",
    "ProjectionMap",
    "corner_rank",
    "rank_cardinality_vector",
    "top_heaviness",
    "capture_time_by_rank",
    "build_projections",
    "check_path_contraction",
]


class InvariantViolation(AssertionError):
    """A property that must hold for every graph failed to hold."""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def strict_corners_in(adj, alive: int) -> int:
    """Mask of strict corners of the subgraph induced by ``alive``."""
    out = 0
    for v in _bits(alive):
        cv = (adj[v] | (1 << v)) & alive
        for w in _bits(adj[v] & alive):
            cw = (adj[w] | (1 << w)) & alive
            if cv & ~cw == 0 and cv != cw:
                out |= 1 << v
                break
    return out


def rank_levels(adj, n: int) -> tuple[list[int], int]:
    """Level masks ``[X_1, X_2, ...]`` and the mask of rank-infinity vertices."""
    alive = (1 << n) - 1
    levels = []
    while True:
        clique = True
        for v in _bits(alive):
            if (adj[v] | (1 << v)) & alive != alive:
                clique = False
                break
        if clique:
            levels.append(alive)
            return levels, 0
        corners = strict_corners_in(adj, alive)
        if not corners:
            return levels, alive
        levels.append(corners)
        alive &= ~corners


@dataclass(frozen=True)
class CornerRanking:
    graph: Graph = field(repr=False)
    ranks: tuple  # rank per vertex: int or INFINITY
    alpha: object  # int or INFINITY
    levels: tuple[frozenset, ...]  # X_1 .. X_k for the finite ranks
    infinite_set: frozenset
    level_masks: tuple[int, ...] = field(repr=False)  # vertex mask of G^(k), k = 1..

    @property
    def is_cop_win(self) -> bool:
        return self.alpha is not INFINITY

    def rank(self, v: int):
        return self.ranks[v]

    def level_mask(self, k: int) -> int:
        """Vertex mask of ``G^(k)``."""
        if not 1 <= k <= len(self.level_masks):
            raise IndexError(f"no level graph G^({k})")
        return self.level_masks[k - 1]

    def level_graph(self, k: int) -> tuple[Graph, tuple[int, ...]]:
        """``G^(k)`` together with the original index of each of its vertices."""
        return induced_subgraph(self.graph, mask_to_set(self.level_mask(k)))


def corner_rank(g: Graph) -> CornerRanking:
    masks, inf = rank_levels(g.adj, g.n)
    ranks = [INFINITY] * g.n
    for k, m in enumerate(masks, start=1):
        for v in _bits(m):
            ranks[v] = k
    alive = g.vertex_mask
    level_masks = []
    for m in masks:
        level_masks.append(alive)
        alive &= ~m
    if inf:
        level_masks.append(inf)
        alpha = INFINITY
    else:
        alpha = len(masks)
    return CornerRanking(
        graph=g,
        ranks=tuple(ranks),
        alpha=alpha,
        levels=tuple(mask_to_set(m) for m in masks),
        infinite_set=mask_to_set(inf),
        level_masks=tuple(level_masks),
    )


def _require_finite(r: CornerRanking):
    if r.alpha is INFINITY:
        raise NotCopWinError("graph has infinite corner rank (not cop-win)")


def rank_cardinality_vector(r: CornerRanking) -> RankVector:
    _require_finite(r)
    return RankVector(tuple(len(x) for x in reversed(r.levels)))


class TopHeaviness(enum.Enum):
    TOP1 = "Top1"
    TOP0 = "Top0"
    CLIQUE_RANK1 = "CliqueRank1"

    @property
    def r(self):
        """The integer 1 or 0; None for cliques."""
        return {"Top1": 1, "Top0": 0}.get(self.value)

    def __str__(self):
        return self.value


def top_heaviness(g: Graph, r: CornerRanking) -> TopHeaviness:
    _require_finite(r)
    a = r.alpha
    if a == 1:
        return TopHeaviness.CLIQUE_RANK1
    below = r.level_mask(a - 1)
    hits = [below & ~g.closed(v) == 0 for v in sorted(r.levels[a - 1])]
    if any(hits) != all(hits):
        raise InvariantViolation("some but not every top-rank vertex dominates G^(alpha-1)")
    return TopHeaviness.TOP1 if hits[0] else TopHeaviness.TOP0


def capture_time_by_rank(g: Graph, r: CornerRanking | None = None):
    if r is None:
        r = corner_rank(g)
    if r.alpha is INFINITY:
        return INFINITY
    if r.alpha == 1:
        return 0 if g.n == 1 else 1
    if top_heaviness(g, r) is TopHeaviness.TOP1:
        return r.alpha - 1
    return r.alpha


class ProjectionMap:
    """The maps ``f_k`` and their composites ``F_k``, built level by level on demand."""

    def __init__(self, g: Graph, r: CornerRanking):
        _require_finite(r)
        self.graph = g
        self.ranking = r
        self.alpha = r.alpha
        self._f = {}

    def _level(self, k):
        if k not in self._f:
            if not 1 <= k < self.alpha:
                raise ValueError(f"f_k is defined for 1 <= k < {self.alpha}, got {k}")
            adj = self.graph.adj
            here = self.ranking.level_mask(k)
            nxt = self.ranking.level_mask(k + 1)
            table = {}
            for u in _bits(here):
                if self.ranking.ranks[u] > k:
                    table[u] = frozenset((u,))
                    continue
                cu = (adj[u] | (1 << u)) & here
                img = 0
                for w in _bits(adj[u] & nxt):
                    cw = (adj[w] | (1 << w)) & here
                    if cu & ~cw == 0 and cu != cw:
                        img |= 1 << w
                if not img:
                    raise InvariantViolation(f"vertex {u} of rank {k} has no higher-rank strict corner")
                table[u] = mask_to_set(img)
            self._f[k] = table
        return self._f[k]

    def f(self, k: int, u: int) -> frozenset:
        table = self._level(k)
        if u not in table:
            raise ValueError(f"vertex {u} is not in G^({k})")
        return table[u]

    def f_set(self, k: int, vertices) -> frozenset:
        out = set()
        for u in vertices:
            out |= self.f(k, u)
        return frozenset(out)

    def F(self, k: int, v) -> frozenset:
        """``F_k`` applied to a vertex or, by union, to a set of vertices."""
        if not 1 <= k <= self.alpha:
            raise ValueError(f"F_k is defined for 1 <= k <= {self.alpha}, got {k}")
        cur = frozenset((v,)) if isinstance(v, int) else frozenset(v)
        for j in range(1, k):
            cur = self.f_set(j, cur)
        return cur


def build_projections(g: Graph, r: CornerRanking) -> ProjectionMap:
    return ProjectionMap(g, r)


def check_path_contraction(g: Graph, r: CornerRanking, v: int, w: int) -> bool:
    """Distance from v to w in G is at least their distance in G^(k), k = cr(v) = cr(w)."""
    k = r.ranks[v]
    if k is INFINITY or r.ranks[w] != k:
        raise ValueError(f"vertices {v} and {w} need equal finite ranks")
    d_g = bfs_distances(g, v).get(w, INFINITY)
    d_k = bfs_distances(g, v, within=r.level_mask(k)).get(w, INFINITY)
    return d_g >= d_k
