import random

from hypothesis import given, settings
from hypothesis import strategies as st

from copwin import build_projections, census, corner_rank, named_graph
from copwin.graph import bfs_distances
from copwin.lemmas import (
    all_checks,
    check_path_projection,
    check_top_rank3_connected,
)
from strategies import connected_graphs


@settings(max_examples=300)
@given(connected_graphs(max_n=9))
def test_structural_checks_hold(g):
    r = corner_rank(g)
    for name, bad in all_checks(g, r).items():
        assert bad == [], name


def random_path(g, rng, length):
    path = [rng.randrange(g.n)]
    for _ in range(length):
        v = path[-1]
        nbrs = [u for u in range(g.n) if g.has_edge(v, u)]
        if not nbrs:
            break
        path.append(rng.choice(nbrs))
    return path


@settings(max_examples=150)
@given(connected_graphs(min_n=2, max_n=9), st.integers(0, 2**32 - 1))
def test_paths_project_to_short_walks(g, seed):
    r = corner_rank(g)
    if not r.is_cop_win:
        return
    rng = random.Random(seed)
    p = build_projections(g, r)
    for _ in range(5):
        assert check_path_projection(g, r, random_path(g, rng, rng.randint(1, 6)), p) == []


def test_shortest_paths_project(h7):
    r = corner_rank(h7)
    for s in range(h7.n):
        dist = bfs_distances(h7, s)
        for t in range(h7.n):
            path = [t]
            while path[-1] != s:
                v = path[-1]
                path.append(next(u for u in range(h7.n) if h7.has_edge(v, u) and dist[u] == dist[v] - 1))
            assert check_path_projection(h7, r, path) == []


def test_rank3_vertices_connected_in_1mk1_realizers():
    for m in range(1, 6):
        for k in range(1, 7 - m):
            for g in census((1, m, k, 1)).realizers:
                assert check_top_rank3_connected(g, corner_rank(g)) == []


def test_checks_skip_non_cop_win(fig2):
    checks = all_checks(fig2, corner_rank(fig2))
    assert checks["homomorphism"] == [] and checks["level-monotone"] == []
    assert check_path_projection(fig2, corner_rank(fig2), [0, 1]) == []
