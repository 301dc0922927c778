"""Canonical labelling by partition refinement and individualisation.

The search tree is the classic one: refine the degree partition to an
equitable partition, then branch on every vertex of the first non-singleton
cell. Each discrete leaf gives an ordering of the vertices; the canonical code
is the largest upper-triangle adjacency code over all leaves. Everything the
tree does depends only on the isomorphism type plus the chosen ordering, so the
maximum is an invariant, and the search is exhaustive inside the refined cells.

Two branches are skipped when they are provably equivalent: vertices of the
branching cell that are twins (open or closed) of an already explored vertex,
and vertices in the same orbit, at the root, as an explored vertex under the
automorphisms discovered from equal leaf codes.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["canonical_labeling", "canonical_form", "certificate", "are_isomorphic"]


def _refine(adj, cells):
    """Refine an ordered partition (list of lists) to an equitable one."""
    cells = [c for c in cells]
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups = {}
            for v in c:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
                continue
            changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _leaf_code(adj, order):
    n = len(order)
    code = 0
    for i in range(n):
        a = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (a >> order[j] & 1)
    return code


def _canonical(adj, n, colors=None):
    if n == 1:
        return 0, (0,)
    if colors is None:
        by = {}
        for v in range(n):
            by.setdefault(adj[v].bit_count(), []).append(v)
        cells = [by[k] for k in sorted(by)]
    else:
        by = {}
        for v in range(n):
            by.setdefault((colors[v], adj[v].bit_count()), []).append(v)
        cells = [by[k] for k in sorted(by)]

    best = [-1, None]
    autos = []  # permutations found as leaf-order compositions

    def twin(u, v):
        return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))

    def search(cells, depth):
        cells = _refine(adj, cells)
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if code > best[0]:
                best[0] = code
                best[1] = order
            elif code == best[0]:
                # order -> best order is an automorphism
                ref = best[1]
                perm = [0] * n
                for i in range(n):
                    perm[order[i]] = ref[i]
                autos.append(perm)
            return
        cell = cells[target]
        tried = []
        for v in cell:
            if any(twin(v, u) for u in tried):
                continue
            if depth == 0 and tried and _in_orbit(v, tried, autos, n):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], depth + 1)

    search(cells, 0)
    return best[0], tuple(best[1])


def _in_orbit(v, reps, autos, n):
    if not autos:
        return False
    seen = {v}
    stack = [v]
    reps = set(reps)
    while stack:
        x = stack.pop()
        if x in reps:
            return True
        for p in autos:
            y = p[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def canonical_labeling(g: Graph, colors=None) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, order)``: ``order[i]`` is the vertex placed at position ``i``.

    ``colors`` (optional, one sortable value per vertex) restricts the search to
    colour-preserving relabellings; the colour classes are ordered by value.
    """
    return _canonical(g.adj, g.n, colors)


def certificate(n: int, code: int) -> bytes:
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + code.to_bytes(nbytes, "big")


def canonical_form(g: Graph, colors=None) -> bytes:
    """Byte key equal for two graphs iff they are isomorphic."""
    code, order = _canonical(g.adj, g.n, colors)
    if colors is None:
        return certificate(g.n, code)
    return certificate(g.n, code) + bytes(repr([colors[v] for v in order]), "ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)
