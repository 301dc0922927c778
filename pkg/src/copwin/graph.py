"""Immutable simple graphs over vertex indices ``0..n-1``.

Adjacency is stored as one open-neighbourhood bitmask per vertex. Loops are
never stored; every query that talks about neighbourhoods uses the closed
neighbourhood ``N[v] = {v} | N(v)``, which is the reflexive convention of the
cops-and-robbers game (a player may always stay put).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphParseError

__all__ = [
    "Graph",
    "closed_neighborhood",
    "dominates",
    "strictly_corners",
    "twins",
    "connected_components",
    "is_connected",
    "relabel",
    "induced_subgraph",
    "bfs_distances",
    "parse_graph",
    "serialize_graph",
    "mask_to_set",
    "set_to_mask",
]


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``adj[v]`` is the bitmask of neighbours of ``v`` (never including ``v``).
    ``labels`` keeps the names vertices had in the source text; it does not take
    part in equality, which is equality of labelled adjacency.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"vertex {v} carries a stored loop")
            m = nb
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= low
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise ValueError("labels length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Hot-path constructor for adjacency produced by this package; skips validation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "labels", tuple(range(1, n + 1)))
        return g

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def closed(self, v: int) -> int:
        """Bitmask of ``N[v]``."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_clique(self) -> bool:
        full = self.vertex_mask
        return all(self.closed(v) == full for v in range(self.n))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return mask_to_set(g.closed(v))


def dominates(g: Graph, v: int, s: Iterable[int]) -> bool:
    """True iff every vertex of ``s`` lies in ``N[v]`` (so ``v`` may be in ``s``)."""
    g._check(v)
    s = list(s)
    for u in s:
        g._check(u)
    return set_to_mask(s) & ~g.closed(v) == 0


def strictly_corners(g: Graph, w: int, v: int) -> bool:
    """True iff ``N[v]`` is a proper subset of ``N[w]``."""
    g._check(w)
    g._check(v)
    if v == w:
        raise ValueError("strict cornering needs two distinct vertices")
    nv, nw = g.closed(v), g.closed(w)
    return nv & ~nw == 0 and nv != nw


def twins(g: Graph, u: int, v: int) -> bool:
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError("twins needs two distinct vertices")
    return g.closed(u) == g.closed(v)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(mask_to_set(comp))
    return comps


def is_connected(g: Graph) -> bool:
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp == g.vertex_mask


def bfs_distances(g: Graph, source: int, within: int | None = None) -> dict[int, int]:
    """Shortest-path distances from ``source`` inside the vertex mask ``within``."""
    if within is None:
        within = g.vertex_mask
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        m = g.adj[u] & within
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``; labels travel with vertices."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex range")
    adj = [0] * g.n
    labels = [None] * g.n
    for v in range(g.n):
        m = g.adj[v]
        out = 0
        while m:
            low = m & -m
            out |= 1 << perm[low.bit_length() - 1]
            m ^= low
        adj[perm[v]] = out
        labels[perm[v]] = g.labels[v]
    return Graph(g.n, tuple(adj), tuple(labels))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices`` (kept in increasing order).

    Returns the subgraph and the tuple of original indices, so that subgraph
    vertex ``i`` is ``g``'s vertex ``orig[i]``.
    """
    orig = tuple(sorted(set(vertices)))
    if not orig:
        raise ValueError("induced subgraph needs at least one vertex")
    index = {v: i for i, v in enumerate(orig)}
    adj = []
    for v in orig:
        g._check(v)
        m = g.adj[v]
        out = 0
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if u in index:
                out |= 1 << index[u]
        adj.append(out)
    return Graph(len(orig), tuple(adj), tuple(g.labels[v] for v in orig)), orig


# -- text formats -------------------------------------------------------------

_HEADER = re.compile(r"^\s*n\s*=\s*(\S+)\s*$")
_PAIR = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")


def _parse_label(tok: str, line: int, col: int) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise GraphParseError(f"vertex label {tok!r} is not a positive integer", line, col)
    return int(tok)


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _build(pairs, n, line_of_first, source_order) -> Graph:
    """Turn labelled pairs into a Graph.

    With an explicit ``n`` labels must lie in ``1..n`` and map to ``label-1``;
    otherwise labels map to indices in order of first appearance.
    """
    if n is not None:
        for lab, (line, col) in line_of_first.items():
            if lab > n:
                raise GraphParseError(f"vertex label {lab} exceeds n={n}", line, col)
        index = {lab: lab - 1 for lab in range(1, n + 1)}
        labels = tuple(range(1, n + 1))
    else:
        if not source_order:
            raise GraphParseError("no vertices: give an 'n=' header or at least one edge", 1, 1)
        index = {lab: i for i, lab in enumerate(source_order)}
        labels = tuple(source_order)
        n = len(source_order)
    adj = [0] * n
    for a, b in pairs:
        i, j = index[a], index[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj), labels)


def parse_graph(text: str | bytes, format: str = "adjlist", n: int | None = None) -> Graph:
    """Parse ``adjlist`` or ``pairs`` text into a Graph.

    ``adjlist``: optional ``n=<int>`` header, then one ``u v`` pair per line,
    labels 1-based. ``pairs``: whitespace separated ``(u,v)`` tokens; ``&`` and
    ``\\\\`` (LaTeX table separators) count as whitespace; an ``n=`` line is
    allowed. ``#`` starts a comment in both. Duplicate edges collapse; a pair
    ``(u,u)`` is an error. Passing ``n`` has the same effect as a header.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format not in ("adjlist", "pairs"):
        raise ValueError(f"unknown graph format {format!r}")
    pairs = []
    first_seen: dict[int, tuple[int, int]] = {}
    order: list[int] = []
    header_n = None
    saw_content = False

    def note(lab, line, col):
        if lab not in first_seen:
            first_seen[lab] = (line, col)
            order.append(lab)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            if saw_content or header_n is not None:
                raise GraphParseError("'n=' header must come first and only once", lineno, 1)
            tok = m.group(1)
            if not tok.isdigit() or int(tok) < 1:
                raise GraphParseError(f"bad vertex count {tok!r}", lineno, line.find(tok) + 1)
            header_n = int(tok)
            continue
        saw_content = True
        if format == "adjlist":
            toks = [(mt.group(), mt.start() + 1) for mt in re.finditer(r"\S+", line)]
            if len(toks) != 2:
                raise GraphParseError(f"expected 'u v', got {line.strip()!r}", lineno, toks[0][1])
            (ta, ca), (tb, cb) = toks
            a = _parse_label(ta, lineno, ca)
            b = _parse_label(tb, lineno, cb)
            if a == b:
                raise GraphParseError(f"self-loop pair ({a},{a})", lineno, ca)
            note(a, lineno, ca)
            note(b, lineno, cb)
            pairs.append((a, b))
        else:
            cleaned = line.replace("&", " ").replace("\\\\", "  ")
            pos = 0
            for mt in _PAIR.finditer(cleaned):
                gap = cleaned[pos:mt.start()]
                if gap.strip():
                    col = pos + len(gap) - len(gap.lstrip()) + 1
                    raise GraphParseError(f"malformed token {gap.strip()!r}", lineno, col)
                a = _parse_label(mt.group(1), lineno, mt.start(1) + 1)
                b = _parse_label(mt.group(2), lineno, mt.start(2) + 1)
                if a == b:
                    raise GraphParseError(f"self-loop pair ({a},{a})", lineno, mt.start() + 1)
                note(a, lineno, mt.start(1) + 1)
                note(b, lineno, mt.start(2) + 1)
                pairs.append((a, b))
                pos = mt.end()
            rest = cleaned[pos:]
            if rest.strip():
                col = pos + len(rest) - len(rest.lstrip()) + 1
                raise GraphParseError(f"malformed token {rest.strip()!r}", lineno, col)
    if n is not None:
        if header_n is not None and header_n != n:
            raise GraphParseError(f"header n={header_n} disagrees with expected n={n}", 1, 1)
        header_n = n
    return _build(pairs, header_n, first_seen, order)


def serialize_graph(g: Graph) -> str:
    """``adjlist`` text with an ``n=`` header and sorted 1-based edges."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
