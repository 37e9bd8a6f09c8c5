import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspectral.graph import (
    Graph,
    GraphFamily,
    adjacency_chunks,
    batch_is_connected,
    book,
    complete,
    complete_bipartite,
    cycle,
    enumerate_labeled_graphs,
    friendship,
    is_connected,
    make_family,
    masks_to_adjacency,
    pair_index,
    pair_list,
    path,
    petersen,
    rook,
    triangular,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_mask(n, mask)


def test_pair_order_is_column_major():
    assert pair_list(4) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
    assert [pair_index(i, j) for i, j in pair_list(6)] == list(range(15))


def test_validation():
    with pytest.raises(ValueError):
        Graph.from_mask(3, 8)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(0, ())


@given(graphs())
def test_mask_matrix_round_trip(g):
    assert Graph.from_mask(g.n, g.mask) == g
    assert Graph.from_matrix(g.matrix()) == g
    assert g.matrix().sum() == 2 * g.edge_count
    assert sum(g.degrees) == 2 * g.edge_count


@given(graphs(), st.randoms())
def test_relabel_preserves_degrees(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees) == sorted(g.degrees)
    assert h.edge_count == g.edge_count


@given(graphs())
@settings(max_examples=200)
def test_connectivity_matches_batch(g):
    assert bool(batch_is_connected(g.matrix()[None])[0]) == is_connected(g)


def test_toggle():
    g = path(3)
    assert g.toggle(0, 2).edge_count == 3
    assert g.toggle(0, 1).edge_count == 1


@pytest.mark.parametrize(
    "g,n,m,degrees",
    [
        (complete(5), 5, 10, {4}),
        (complete_bipartite(2, 3), 5, 6, {2, 3}),
        (cycle(6), 6, 6, {2}),
        (path(4), 4, 3, {1, 2}),
        (petersen(), 10, 15, {3}),
        (rook(4), 16, 48, {6}),
        (triangular(5), 10, 30, {6}),
        (book(3), 5, 7, {2, 4}),
        (friendship(7), 7, 9, {2, 6}),
        (friendship(6), 6, 7, {1, 2, 5}),
    ],
)
def test_families(g, n, m, degrees):
    assert (g.n, g.edge_count, set(g.degrees)) == (n, m, degrees)
    assert is_connected(g)


def test_family_registry():
    assert make_family("cycle", 5) == cycle(5)
    assert make_family(GraphFamily("rook", (3,))) == rook(3)
    with pytest.raises(ValueError):
        make_family("cycle")
    with pytest.raises(ValueError):
        make_family("nope", 3)


def test_labeled_counts():
    # connected labeled graphs: 1, 1, 4, 38, 728
    for n, want in [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)]:
        assert sum(len(m) for m, _ in adjacency_chunks(n, connected_only=True)) == want
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64


def test_chunk_ranges_partition():
    whole = np.concatenate([m for m, _ in adjacency_chunks(5, True)])
    parts = np.concatenate(
        [m for lo in range(0, 1024, 100) for m, _ in adjacency_chunks(5, True, 37, lo, min(lo + 100, 1024))]
    )
    assert np.array_equal(whole, parts)
    a = masks_to_adjacency(whole[:5], 5)
    assert all(Graph.from_matrix(x).mask == m for x, m in zip(a, whole[:5].tolist()))
