import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copwin import (
    Graph,
    GraphParseError,
    closed_neighborhood,
    connected_components,
    dominates,
    is_connected,
    named_graph,
    parse_graph,
    relabel,
    serialize_graph,
    strictly_corners,
    twins,
)
from copwin.catalog import bundled_corpus
from copwin.graph import bfs_distances, induced_subgraph, mask_to_set, set_to_mask
from strategies import graphs, label_index


def P(n):
    return named_graph("P", n)


def K(n):
    return named_graph("K", n)


# -- value type --------------------------------------------------------------


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))  # stored loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(IndexError):
        Graph.from_edges(3, [(0, 3)])


def test_edges_and_counts():
    g = Graph.from_edges(4, [(2, 1), (0, 1), (3, 2), (0, 1)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.num_edges == 3
    assert g.degree(1) == 2
    assert K(4).is_clique() and not P(3).is_clique()
    assert K(1).is_clique()


@given(graphs())
def test_symmetry_and_reflexive_convention(g):
    for v in range(g.n):
        assert v in closed_neighborhood(g, v)
        assert not g.has_edge(v, v)
        for u in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)


def test_mask_helpers():
    assert mask_to_set(0b1011) == {0, 1, 3}
    assert set_to_mask([0, 1, 3]) == 0b1011
    assert set_to_mask([]) == 0


# -- neighbourhood queries ---------------------------------------------------


def test_closed_neighborhood_examples(h7):
    ix = label_index(h7)
    got = {h7.labels[u] for u in closed_neighborhood(h7, ix["d"])}
    assert got == {"d", "b1", "c1", "c2"}
    assert closed_neighborhood(K(1), 0) == {0}
    assert closed_neighborhood(P(3), 1) == {0, 1, 2}
    with pytest.raises(IndexError):
        closed_neighborhood(P(3), 3)


def test_dominates_examples(h7):
    ix = label_index(h7)
    assert dominates(h7, ix["a1"], [ix["b1"], ix["b2"], ix["a2"]])
    assert dominates(h7, ix["a1"], [ix["a1"]])
    for v in range(h7.n):
        assert dominates(h7, v, [])
    assert not dominates(P(5), 0, [2])
    with pytest.raises(IndexError):
        dominates(P(3), 0, [5])


def test_strictly_corners_examples(h7):
    ix = label_index(h7)
    assert strictly_corners(h7, ix["b1"], ix["d"])
    assert not strictly_corners(K(2), 0, 1)
    c5 = named_graph("C", 5)
    assert not any(strictly_corners(c5, w, v) for w in range(5) for v in range(5) if v != w)
    with pytest.raises(ValueError):
        strictly_corners(h7, 0, 0)


def test_twins_examples(h7):
    ix = label_index(h7)
    assert twins(K(3), 0, 1)
    assert not twins(P(3), 0, 2)
    assert not twins(h7, ix["a1"], ix["a2"])
    with pytest.raises(ValueError):
        twins(K(3), 1, 1)


@given(graphs(max_n=7), st.data())
def test_strict_corner_and_twin_are_exclusive(g, data):
    if g.n < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    assert not (twins(g, u, v) and strictly_corners(g, u, v))
    assert not (strictly_corners(g, u, v) and strictly_corners(g, v, u))


# -- connectivity and distances ------------------------------------------------


def test_components_examples(h7):
    assert len(connected_components(P(5))) == 1
    k2k1 = Graph.from_edges(3, [(0, 1)])
    assert sorted(map(sorted, connected_components(k2k1))) == [[0, 1], [2]]
    assert is_connected(h7)
    assert not is_connected(k2k1)


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    for c in comps:
        for v in c:
            assert mask_to_set(g.adj[v]) <= c


def test_bfs_distances_and_induced_subgraph():
    p5 = P(5)
    assert bfs_distances(p5, 0) == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4}
    assert bfs_distances(p5, 0, within=0b11011) == {0: 0, 1: 1}
    h, orig = induced_subgraph(p5, [1, 2, 3])
    assert orig == (1, 2, 3)
    assert h.edges() == [(0, 1), (1, 2)]
    assert h.labels == (2, 3, 4)


@given(graphs(max_n=7), st.data())
def test_relabel_preserves_structure(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = relabel(g, perm)
    assert h.num_edges == g.num_edges
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])


# -- text formats -------------------------------------------------------------


def test_parse_adjlist_example():
    g = parse_graph("n=3\n1 2\n2 3\n")
    assert g == P(3)


def test_parse_pairs_infers_n():
    g = parse_graph("(1,2) (2,3) (1,3)", format="pairs")
    assert g.n == 3 and g.is_clique()


def test_parse_pairs_latex_separators_and_comments():
    g = parse_graph("(1,2) & (2,3) \\\\  # tail\n(3, 4)", format="pairs")
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_parse_printed_edge_table():
    fx = {f.name: f for f in bundled_corpus()}["r1_1_2_8_4_1"]
    assert fx.graph.n == 16 and fx.graph.num_edges == 43


def test_parse_first_appearance_order_without_header():
    g = parse_graph("5 9\n9 2\n")
    assert g.labels == (5, 9, 2)
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_duplicate_edges_collapse():
    assert parse_graph("1 2\n2 1\n1 2\n").num_edges == 1


@pytest.mark.parametrize(
    "text,fmt,line,col",
    [
        ("n=3\n1 1\n", "adjlist", 2, 1),
        ("n=3\n1 2 3\n", "adjlist", 2, 1),
        ("n=2\n1 3\n", "adjlist", 2, 3),
        ("n=3\n1 x\n", "adjlist", 2, 3),
        ("(1,2) (2,2)", "pairs", 1, 7),
        ("(1,2) junk (2,3)", "pairs", 1, 7),
        ("(1,2)\n  (0,3)", "pairs", 2, 4),
        ("1 2\nn=3\n", "adjlist", 2, 1),
    ],
)
def test_parse_errors_carry_position(text, fmt, line, col):
    with pytest.raises(GraphParseError) as e:
        parse_graph(text, format=fmt)
    assert (e.value.line, e.value.column) == (line, col)


def test_parse_rejects_unknown_format_and_empty_input():
    with pytest.raises(ValueError):
        parse_graph("1 2", format="graph6")
    with pytest.raises(GraphParseError):
        parse_graph("# nothing\n")


def test_parse_header_only_gives_isolated_vertices():
    g = parse_graph("n=3\n")
    assert g.n == 3 and g.num_edges == 0


def test_parse_bytes():
    assert parse_graph(b"1 2\n") == K(2)


@given(graphs())
def test_serialize_round_trip(g):
    text = serialize_graph(g)
    h = parse_graph(text)
    assert h == g
    assert serialize_graph(h) == text
