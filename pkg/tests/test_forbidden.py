import pytest
from hypothesis import given, settings

from qspectral.forbidden import (
    UnsupportedSize,
    common_neighbors,
    is_book_free,
    is_c4_free,
    is_kst_free,
    pair_common_stats,
    profile,
    srg_params,
    tsubset_max,
    tsubset_max_batch,
)
from qspectral.graph import Graph, complete, cycle, friendship, path, petersen, rook, triangular

from oracles import brute_kst, brute_srg
from test_graph import graphs


def test_common_neighbors():
    k4, c5 = complete(4), cycle(5)
    assert common_neighbors(k4, 0, 3) == 2
    assert common_neighbors(c5, 0, 1) == 0 and common_neighbors(c5, 0, 2) == 1
    with pytest.raises(IndexError):
        common_neighbors(c5, 0, 5)
    with pytest.raises(ValueError):
        common_neighbors(c5, 1, 1)


def test_profiles():
    p = profile(petersen())
    assert (p.max_adjacent_common, p.max_nonadjacent_common) == (0, 1)
    assert profile(complete(6), [3]).tsubset_max[3] == 3
    assert profile(cycle(6), [3]).tsubset_max[3] == 0
    r = profile(rook(4))
    assert (r.max_adjacent_common, r.max_nonadjacent_common) == (2, 2)
    assert profile(complete(3)).max_nonadjacent_common is None
    assert profile(Graph(3, (0, 0, 0))).max_adjacent_common is None
    with pytest.raises(ValueError):
        tsubset_max(cycle(4), 5)


def test_kst_fixtures():
    assert not is_kst_free(complete(6), 3, 3)
    assert is_kst_free(cycle(6), 3, 3)
    assert is_kst_free(petersen(), 3, 3)
    with pytest.raises(ValueError):
        is_kst_free(cycle(6), 2, 3)
    with pytest.raises(UnsupportedSize):
        is_kst_free(path(30), 3, 3)
    with pytest.raises(UnsupportedSize):
        is_kst_free(path(10), 5, 5)
    # pair scans carry no order cap
    assert is_kst_free(path(30), 2, 2)


def test_books():
    assert is_book_free(petersen(), 1)
    assert is_book_free(complete(4), 3) and not is_book_free(complete(4), 2)
    assert is_book_free(rook(4), 3)
    assert is_c4_free(friendship(7)) and not is_c4_free(cycle(4))


def test_srg():
    for g, want in [(petersen(), (10, 3, 0, 1)), (rook(4), (16, 6, 2, 2)), (triangular(5), (10, 6, 3, 4))]:
        s = srg_params(g)
        assert (s.n, s.k_reg, s.a, s.c) == want == brute_srg(g)
    assert srg_params(path(4)) is None
    assert srg_params(complete(5)) is None
    assert srg_params(Graph(4, (0,) * 4)) is None
    # 2K_3 is regular with a = 1 but nonadjacent pairs share nothing
    assert srg_params(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])) is None


@given(graphs(max_n=7))
@settings(max_examples=150)
def test_kst_matches_brute_force(g):
    for s, t in [(2, 2), (3, 2), (3, 3)]:
        assert is_kst_free(g, s, t) == (not brute_kst(g, s, t))


@given(graphs(max_n=7))
@settings(max_examples=100)
def test_orientation_duality(g):
    # K_{s,t} with s >= t: some t-set has s common neighbours, equivalently some s-set has t
    for s, t in [(3, 2), (4, 3)]:
        if g.n >= s + t:
            via_t = profile(g, [t]).tsubset_max[t] >= s
            via_s = profile(g, [s]).tsubset_max[s] >= t
            assert via_t == via_s == brute_kst(g, s, t)


@given(graphs(max_n=7))
@settings(max_examples=100)
def test_batched_stats_match(g):
    a = g.matrix()[None]
    p = profile(g, [t for t in (3,) if t <= g.n])
    mac, mnc = pair_common_stats(a)
    assert mac[0] == (-1 if p.max_adjacent_common is None else p.max_adjacent_common)
    assert mnc[0] == (-1 if p.max_nonadjacent_common is None else p.max_nonadjacent_common)
    if g.n >= 3:
        assert tsubset_max_batch(a, 3)[0] == p.tsubset_max[3]


@given(graphs(max_n=7))
@settings(max_examples=100)
def test_srg_matches_brute_force(g):
    s = srg_params(g)
    assert (None if s is None else (s.n, s.k_reg, s.a, s.c)) == brute_srg(g)
