import pytest
from hypothesis import given, settings

from copwin import (
    INFINITY,
    GameStateError,
    Graph,
    canonical_form,
    capture_time_by_game,
    capture_time_by_rank,
    census,
    enumerate_connected,
    max_capture_time,
    named_graph,
    optimal_cop_move,
    solve_game,
)
from oracles import INF, naive_capture_time, to_nx
from strategies import connected_graphs, graphs, label_index


def test_k2_value():
    t = solve_game(named_graph("K", 2))
    assert t.value[0][1] == 1 and t(0, 1) == 1


def test_p5_center_to_end():
    t = solve_game(named_graph("P", 5))
    assert t.value[2][0] == 2 and t.value[2][4] == 2


def test_fig2_has_infinite_states(fig2):
    t = solve_game(fig2)
    ix = label_index(fig2)
    cycle = [ix[f"v{i}"] for i in range(1, 6)]
    assert any(t.value[c][r] is INFINITY for c in range(fig2.n) for r in cycle)


def test_capture_time_examples(h7, fig2):
    assert capture_time_by_game(named_graph("P", 4)) == 2
    assert capture_time_by_game(h7) == 3
    assert capture_time_by_game(named_graph("K", 1)) == 0
    assert capture_time_by_game(fig2) is INFINITY


@settings(max_examples=150)
@given(graphs(max_n=7))
def test_matches_naive_bellman_oracle(g):
    want = naive_capture_time(to_nx(g))
    got = capture_time_by_game(g)
    assert (INF if got is INFINITY else got) == want


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_game_equals_rank(g):
    assert capture_time_by_game(g) == capture_time_by_rank(g)


@given(graphs(max_n=7))
def test_bellman_relation(g):
    t = solve_game(g)
    n = g.n
    for c in range(n):
        assert t.value[c][c] == 0
        for r in range(n):
            if c == r or t.value[c][r] is INFINITY:
                continue
            options = []
            for c2 in range(n):
                if c2 != c and not g.has_edge(c, c2):
                    continue
                if c2 == r:
                    options.append(1)
                    continue
                replies = [t.value[c2][r2] for r2 in range(n) if (r2 == r or g.has_edge(r, r2)) and r2 != c2]
                worst = max(replies)
                if worst is not INFINITY:
                    options.append(1 + worst)
            assert t.value[c][r] == min(options)


@given(graphs(max_n=7))
def test_iterates_are_monotone_and_bounded(g):
    t = solve_game(g)
    n = g.n
    assert t.rounds <= n * n
    for step in range(t.rounds + 1):
        cur = t.iterate(step)
        nxt = t.iterate(step + 1)
        assert all(a <= b for ra, rb in zip(cur, nxt) for a, b in zip(ra, rb))
    for row in t.value:
        for v in row:
            assert v is INFINITY or v <= n * n


@given(graphs(min_n=2, max_n=7))
def test_robber_is_never_forced(g):
    # the robber can always stay put, so capture on the robber's move never happens
    t = solve_game(g)
    for c in range(g.n):
        for r in range(g.n):
            if c != r and not g.has_edge(c, r):
                assert t.value[c][r] != 1


def play_out(g, t, c, r):
    """Longest game under the stored cop strategy against every robber reply."""
    if c == r:
        return 0
    c2 = optimal_cop_move(t, c, r)
    if c2 == r:
        return 1
    replies = [r2 for r2 in range(g.n) if (r2 == r or g.has_edge(r, r2)) and r2 != c2]
    return 1 + max(play_out(g, t, c2, r2) for r2 in replies)


@settings(max_examples=60)
@given(connected_graphs(max_n=7))
def test_strategy_captures_in_exactly_capture_time(g):
    t = solve_game(g)
    ct = capture_time_by_game(g, t)
    if ct is INFINITY:
        return
    best = min(max(play_out(g, t, c, r) for r in range(g.n)) for c in range(g.n))
    assert best == ct
    for c in range(g.n):
        for r in range(g.n):
            if t.value[c][r] is not INFINITY:
                assert play_out(g, t, c, r) == t.value[c][r]


def test_optimal_move_examples(h7):
    p5 = named_graph("P", 5)
    t = solve_game(p5)
    assert optimal_cop_move(t, 2, 0) == 1
    assert optimal_cop_move(t, 2, 4) == 3
    k4 = named_graph("K", 4)
    tk = solve_game(k4)
    assert all(optimal_cop_move(tk, c, r) == r for c in range(4) for r in range(4) if c != r)
    th = solve_game(h7)
    ix = label_index(h7)
    # a1 -> b1 covers N[d], so this state is worth 2, not 3
    assert th.value[ix["a1"]][ix["d"]] == 2
    assert th.best_cop_move(ix["a1"], ix["d"]) == ix["b1"]
    # robber on c1 is the 3-move state from a1; the stored move brings it to 2
    assert th.value[ix["a1"]][ix["c1"]] == 3
    move = th.best_cop_move(ix["a1"], ix["c1"])
    nr = [ix["c1"]] + [v for v in range(7) if h7.has_edge(ix["c1"], v)]
    assert max(th.value[move][r] for r in nr if r != move) == 2


def test_optimal_move_errors(fig2):
    t = solve_game(named_graph("P", 3))
    with pytest.raises(GameStateError):
        optimal_cop_move(t, 1, 1)
    tf = solve_game(fig2)
    bad = next((c, r) for c in range(fig2.n) for r in range(fig2.n) if tf.value[c][r] is INFINITY)
    with pytest.raises(GameStateError):
        optimal_cop_move(tf, *bad)


def test_max_capture_time_small_orders():
    assert max_capture_time(4, enumerate_connected(4)) == (2, [canonical_form(named_graph("P", 4))])
    assert max_capture_time(6, enumerate_connected(6)) == (3, [canonical_form(named_graph("P", 6))])


def test_max_capture_time_seven(h7):
    ct, forms = max_capture_time(7, enumerate_connected(7))
    assert ct == 3 and len(forms) == 9
    expected = {canonical_form(named_graph("P", 7)), canonical_form(h7)}
    for v in [(2, 2, 3), (2, 3, 2), (3, 2, 2)]:
        expected |= set(census(v, "top0").forms)
    assert set(forms) == expected


def test_max_capture_time_errors():
    with pytest.raises(ValueError):
        max_capture_time(3, [])
    with pytest.raises(ValueError):
        max_capture_time(3, [named_graph("P", 4)])
    with pytest.raises(ValueError):
        max_capture_time(2, [Graph.from_edges(2, [])])


@pytest.mark.slow
def test_ct_maximal_nine_vertex_graphs():
    # the game oracle alone over every connected graph on 9 vertices
    graphs = list(enumerate_connected(9))
    assert len(graphs) == 261080
    ct, forms = max_capture_time(9, graphs)
    assert ct == 5
    assert forms == sorted(census((2, 2, 2, 1, 1, 1)).forms)
