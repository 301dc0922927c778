import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from copwin import (
    RankVector,
    candidate_vectors,
    census,
    initial_segment,
    is_augmentation,
    is_extension,
    leq,
    parse_vector,
    predecessors,
    standard_extension,
)
from copwin.vectors import compositions, sorted_vectors


def V(*e):
    return RankVector(e)


def all_vectors(max_sum):
    return [RankVector(c) for n in range(1, max_sum + 1) for c in compositions(n)]


vectors = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda e: RankVector(tuple(e)))


def test_value_type():
    v = V(2, 2, 2, 1)
    assert len(v) == 4 and v.total == 7 and list(v) == [2, 2, 2, 1]
    assert v.x(1) == 1 and v.x(4) == 2 and v[0] == 2
    assert str(v) == "(2,2,2,1)"
    assert RankVector.of(2, 2) == V(2, 2)
    with pytest.raises(ValueError):
        RankVector(())
    with pytest.raises(ValueError):
        V(2, 0)
    with pytest.raises(IndexError):
        v.x(5)


def test_parse_vector():
    assert parse_vector("( 2, 2 ,2,1 )") == V(2, 2, 2, 1)
    assert parse_vector("(5)") == V(5)
    for bad in ["2,2", "()", "(2,,2)", "(a,1)", "(0,1)", "(2,2"]:
        with pytest.raises(ValueError):
            parse_vector(bad)


def test_sorted_vectors_by_length_then_entries():
    vs = [V(2, 1), V(3), V(1, 2), V(1, 1, 1)]
    assert sorted_vectors(vs) == [V(3), V(1, 2), V(2, 1), V(1, 1, 1)]


def test_augmentation_examples():
    assert is_augmentation(V(5, 2, 6, 2, 3), V(3, 2, 2, 2, 2))
    assert is_augmentation(V(2, 2), V(2, 2))
    assert not is_augmentation(V(2, 2, 2), V(2, 2))


def test_initial_segment_examples():
    assert initial_segment(V(2, 2, 2, 1), 2) == V(2, 2, 2)
    assert initial_segment(V(2, 2, 2, 1), 1) == V(2, 2, 2, 1)
    assert initial_segment(V(1, 2, 8, 4, 1), 3) == V(1, 2, 8)
    with pytest.raises(ValueError):
        initial_segment(V(1, 2), 3)
    with pytest.raises(ValueError):
        initial_segment(V(1, 2), 0)


def test_standard_extension_examples():
    assert standard_extension(V(3, 2, 2), 2) == V(3, 2, 2, 2, 2)
    assert standard_extension(V(1, 2), 0) == V(1, 2)
    assert standard_extension(V(2, 2, 2, 1), 1) == V(2, 2, 2, 1, 1)


def test_extension_predicate():
    assert is_extension(V(2, 2, 2, 1, 7), V(2, 2, 2, 1))
    assert is_extension(V(2, 2), V(2, 2))
    assert not is_extension(V(2, 3, 1), V(2, 2))


def test_leq_examples():
    assert leq(V(3, 2, 2), V(5, 2, 6, 2, 3))
    assert leq(V(1, 4, 2), V(1, 4, 2))
    assert not leq(V(2, 2, 2, 2), V(2, 2, 2, 1))


@given(vectors)
def test_leq_reflexive(x):
    assert leq(x, x)


@given(vectors, vectors)
def test_leq_antisymmetric(x, y):
    if leq(x, y) and leq(y, x):
        assert x == y


@given(vectors, vectors, vectors)
def test_leq_transitive(x, y, z):
    assume(leq(x, y))
    if leq(y, z):
        assert leq(x, z)


def test_leq_transitive_exhaustive_small():
    vs = all_vectors(6)
    below = {y: {x for x in vs if leq(x, y)} for y in vs}
    for z in vs:
        for y in below[z]:
            assert below[y] <= below[z]


def test_leq_matches_construction_up_to_sum_9():
    vs = all_vectors(9)
    for x in vs:
        built = set()
        for l in range(0, 10 - len(x)):
            e = standard_extension(x, l)
            if e.total > 9:
                break
            slack = 9 - e.total
            # every augmentation of e with total <= 9
            for add in itertools.product(range(slack + 1), repeat=len(e)):
                if sum(add) <= slack:
                    built.add(RankVector(tuple(a + b for a, b in zip(e, add))))
        assert built == {y for y in vs if leq(x, y)}


def test_predecessor_examples():
    assert predecessors(V(1, 2), 2) == {V(1, 1), V(1, 2)}
    assert predecessors(V(2, 2), 2) == {V(1, 1), V(1, 2), V(2, 1), V(2, 2)}
    with pytest.raises(ValueError):
        predecessors(V(2, 2), 0)


def test_predecessors_match_brute_force_up_to_sum_9():
    vs = all_vectors(9)
    for x in vs:
        want = {y for y in vs if len(y) >= 2 and leq(y, x)}
        assert predecessors(x, 2) == want


@given(vectors, st.integers(1, 4))
def test_predecessors_round_trip(x, m):
    for y in predecessors(x, m):
        assert leq(y, x) and len(y) >= m


def test_candidate_vectors_examples():
    assert candidate_vectors(6, 3) == {V(2, 2, 2), V(1, 3, 2), V(1, 2, 3), V(1, 2, 2, 1)}
    assert candidate_vectors(3, 1) == {V(3), V(1, 2), V(2, 1)}
    eight = candidate_vectors(8, 4)
    assert {V(2, 2, 2, 2), V(2, 2, 2, 1, 1)} <= eight


@pytest.mark.parametrize("n", range(1, 10))
def test_candidate_vectors_postcondition(n):
    got = candidate_vectors(n, 1)
    want = {RankVector(c) for c in compositions(n) if len(c) < 3 or (c[1] >= 2 and c[2] >= 2)}
    assert got == want
    with pytest.raises(ValueError):
        candidate_vectors(0)


def test_compositions_count():
    for n in range(1, 9):
        assert len(list(compositions(n))) == 2 ** (n - 1)
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]


def test_realizability_is_upward_closed_up_to_seven_vertices():
    vs = [v for v in all_vectors(7) if len(v) >= 2]
    for filt in ("top0", "top1"):
        real = {v for v in vs if census(v, filt).count}
        for x in real:
            for y in vs:
                if leq(x, y):
                    assert y in real, (filt, x, y)
