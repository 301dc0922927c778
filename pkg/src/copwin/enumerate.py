"""Isomorph-free generation of connected graphs by vertex addition.

Every connected graph on n vertices has a vertex whose removal leaves it
connected, so all classes of order n arise by attaching one new vertex (with a
non-empty neighbourhood) to the classes of order n - 1. A child is kept only
when its new vertex has the smallest degree among the non-cut vertices; this
still reaches every class (delete a non-cut vertex of smallest degree) and
discards most duplicate children before canonicalisation.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import _canonical, certificate
from .errors import ResourceCapError
from .graph import Graph

DEFAULT_CAP = 9


def _connected_without(adj, full, v):
    rest = full & ~(1 << v)
    if not rest:
        return True
    start = rest & -rest
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & rest & ~comp
        comp |= frontier
    return comp == rest


def _canonical_adj(adj, n, order):
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for v in range(n):
        m = adj[v]
        o = 0
        while m:
            low = m & -m
            o |= 1 << pos[low.bit_length() - 1]
            m ^= low
        out[pos[v]] = o
    return tuple(out)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[bytes, tuple[int, ...]], ...]:
    """Sorted ``(certificate, canonical adjacency)`` pairs for connected graphs of order n."""
    if n == 1:
        return ((certificate(1, 0), (0,)),)
    found = {}
    full = (1 << n) - 1
    new = n - 1
    for _, parent in _classes(n - 1):
        for nb in range(1, 1 << new):
            adj = list(parent)
            m = nb
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= 1 << new
                m ^= low
            adj.append(nb)
            d = nb.bit_count()
            # the new vertex must be a smallest-degree non-cut vertex
            ok = True
            for u in range(new):
                if adj[u].bit_count() < d and _connected_without(adj, full, u):
                    ok = False
                    break
            if not ok:
                continue
            code, order = _canonical(adj, n)
            key = certificate(n, code)
            if key not in found:
                found[key] = _canonical_adj(adj, n, order)
    return tuple(sorted(found.items()))


def class_count(n: int, cap: int = DEFAULT_CAP) -> int:
    return len(_generate(n, cap))


def _generate(n, cap):
    if n < 1:
        raise ValueError("graph order must be at least 1")
    if n > cap:
        raise ResourceCapError(f"n={n} exceeds the enumeration cap {cap}")
    return _classes(n)


def enumerate_connected(n: int, cap: int = DEFAULT_CAP):
    """Yield one canonically labelled representative per connected class of order n,
    in increasing certificate order."""
    for _, adj in _generate(n, cap):
        yield Graph._trusted(n, adj)


def enumerate_with_forms(n: int, cap: int = DEFAULT_CAP):
    """Like :func:`enumerate_connected`, paired with each graph's canonical form."""
    for key, adj in _generate(n, cap):
        yield key, Graph._trusted(n, adj)
