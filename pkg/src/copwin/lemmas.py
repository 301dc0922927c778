"""Structural predicates that every cop-win graph must satisfy.

Each checker returns a list of human-readable violations; an empty list means
the property holds. They are used by the verification suites and the tests.
"""

from __future__ import annotations

from .graph import Graph, bfs_distances, is_connected, induced_subgraph, mask_to_set
from .infinity import INFINITY
from .rank import CornerRanking, ProjectionMap, check_path_contraction

__all__ = [
    "check_upcorner",
    "check_neighbor_below",
    "check_nbrrank",
    "check_no_near_top_dominator",
    "check_homomorphism",
    "check_path_contraction_all",
    "check_path_projection",
    "check_top_rank3_connected",
    "check_level_monotone",
]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cornered_by(g, here, v):
    """Vertices strictly cornering ``v`` inside the vertex mask ``here``."""
    cv = g.closed(v) & here
    out = []
    for w in _bits(g.adj[v] & here):
        cw = g.closed(w) & here
        if cv & ~cw == 0 and cv != cw:
            out.append(w)
    return out


def check_upcorner(g: Graph, r: CornerRanking) -> list[str]:
    """A vertex of rank k below the top is strictly cornered in G^(k) by a higher-rank vertex."""
    bad = []
    for v in range(g.n):
        k = r.ranks[v]
        if k is INFINITY or k == r.alpha:
            continue
        here = r.level_mask(k)
        if not any(r.ranks[w] > k for w in _cornered_by(g, here, v)):
            bad.append(f"vertex {v} (rank {k}) has no higher-rank strict corner")
    return bad


def check_neighbor_below(g: Graph, r: CornerRanking) -> list[str]:
    bad = []
    for v in range(g.n):
        k = r.ranks[v]
        if k is INFINITY or k == 1:
            continue
        if not any(r.ranks[u] == k - 1 for u in _bits(g.adj[v])):
            bad.append(f"vertex {v} (rank {k}) has no neighbour of rank {k - 1}")
    return bad


def check_nbrrank(g: Graph, r: CornerRanking) -> list[str]:
    """For each w strictly cornering v in G^(k), v has a rank k-1 neighbour missed by w."""
    bad = []
    for v in range(g.n):
        k = r.ranks[v]
        if k is INFINITY or k == 1:
            continue
        below = [u for u in _bits(g.adj[v]) if r.ranks[u] == k - 1]
        for w in _cornered_by(g, r.level_mask(k), v):
            if all(g.has_edge(u, w) for u in below):
                bad.append(f"vertex {v}: every rank {k - 1} neighbour is adjacent to {w}")
    return bad


def check_no_near_top_dominator(g: Graph, r: CornerRanking) -> list[str]:
    a = r.alpha
    if a is INFINITY or a < 2:
        return []
    level = r.level_mask(a - 1) & ~r.level_mask(a)
    bad = []
    for b in _bits(level):
        if level & ~g.closed(b) == 0:
            bad.append(f"rank {a - 1} vertex {b} dominates its own level")
    return bad


def check_homomorphism(g: Graph, r: CornerRanking, p: ProjectionMap | None = None) -> list[str]:
    """Each f_k sends edges of G^(k) to pairs that are adjacent or equal."""
    if r.alpha is INFINITY:
        return []
    p = p or ProjectionMap(g, r)
    bad = []
    for k in range(1, r.alpha):
        here = r.level_mask(k)
        for u in _bits(here):
            for v in _bits(g.adj[u] & here):
                if v < u:
                    continue
                for a in p.f(k, u):
                    for b in p.f(k, v):
                        if a != b and not g.has_edge(a, b):
                            bad.append(f"f_{k}: edge {u}-{v} maps to non-adjacent {a},{b}")
    return bad


def check_path_contraction_all(g: Graph, r: CornerRanking) -> list[str]:
    bad = []
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if r.ranks[v] is not INFINITY and r.ranks[v] == r.ranks[w]:
                if not check_path_contraction(g, r, v, w):
                    bad.append(f"vertices {v},{w} are closer in G than in their level graph")
    return bad


def check_path_projection(g: Graph, r: CornerRanking, path, p: ProjectionMap | None = None) -> list[str]:
    """For a path of length m in G and every k, some choice of images under F_k
    is a walk of length at most m in G^(k)."""
    if r.alpha is INFINITY:
        return []
    p = p or ProjectionMap(g, r)
    bad = []
    for k in range(1, r.alpha + 1):
        reach = set(p.F(k, path[0]))
        for x in path[1:]:
            reach = {q for q in p.F(k, x) if any(q == s or g.has_edge(q, s) for s in reach)}
            if not reach:
                break
        if not reach:
            bad.append(f"F_{k} breaks the path {list(path)}")
    return bad


def check_top_rank3_connected(g: Graph, r: CornerRanking) -> list[str]:
    """For realizers of (1,m,k,1): the rank-3 vertices induce a connected subgraph."""
    if r.alpha != 4 or len(r.levels[3]) != 1 or len(r.levels[0]) != 1:
        return []
    h, _ = induced_subgraph(g, r.levels[2])
    return [] if is_connected(h) else ["rank 3 vertices induce a disconnected subgraph"]


def check_level_monotone(g: Graph, r: CornerRanking) -> list[str]:
    bad = []
    masks = r.level_masks
    for k in range(len(masks) - 1):
        if masks[k + 1] & ~masks[k] or masks[k + 1] == masks[k]:
            bad.append(f"G^({k + 2}) is not a proper subgraph of G^({k + 1})")
    if r.alpha is not INFINITY and any(not x for x in r.levels):
        bad.append("empty level")
    return bad


def all_checks(g: Graph, r: CornerRanking) -> dict[str, list[str]]:
    p = ProjectionMap(g, r) if r.alpha is not INFINITY else None
    return {
        "upcorner": check_upcorner(g, r),
        "neighbor-below": check_neighbor_below(g, r),
        "nbrrank": check_nbrrank(g, r),
        "no-near-top-dominator": check_no_near_top_dominator(g, r),
        "homomorphism": check_homomorphism(g, r, p) if p else [],
        "path-contraction": check_path_contraction_all(g, r),
        "level-monotone": check_level_monotone(g, r),
    }
