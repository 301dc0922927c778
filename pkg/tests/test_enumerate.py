import pytest

from copwin import (
    Graph,
    ResourceCapError,
    canonical_form,
    class_count,
    enumerate_connected,
    is_connected,
)
from copwin.enumerate import enumerate_with_forms
from oracles import atlas_connected, class_counts_by_orbits


def test_small_counts():
    assert len(list(enumerate_connected(1))) == 1
    assert len(list(enumerate_connected(4))) == 6
    assert class_count(7) == 853


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_counts_match_orbit_oracle(n):
    assert class_count(n) == class_counts_by_orbits(n)


def test_eight_vertex_count():
    # connected graphs on 8 vertices, the published sequence value
    assert class_count(8) == 11117


def test_classes_match_atlas_up_to_seven():
    atlas = atlas_connected(7)
    for n in range(1, 8):
        want = {canonical_form(Graph.from_edges(n, list(h.edges()))) for h in atlas[n]}
        got = [key for key, _ in enumerate_with_forms(n)]
        assert len(got) == len(set(got)) == len(want)
        assert set(got) == want


def test_representatives_are_canonical_connected_and_sorted():
    keys = []
    for key, g in enumerate_with_forms(6):
        assert is_connected(g)
        assert canonical_form(g) == key
        keys.append(key)
    assert keys == sorted(keys)


def test_deterministic():
    assert list(enumerate_connected(5)) == list(enumerate_connected(5))


def test_cap():
    with pytest.raises(ResourceCapError):
        list(enumerate_connected(10))
    with pytest.raises(ResourceCapError):
        list(enumerate_connected(5, cap=4))
    with pytest.raises(ValueError):
        list(enumerate_connected(0))
