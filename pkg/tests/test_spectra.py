import math

import numpy as np
import pytest
from hypothesis import given, settings

from qspectral.graph import Graph, complete, complete_bipartite, cycle, path, petersen
from qspectral.spectra import (
    adj_radius,
    adj_radius_batch,
    dense_eigen_oracle,
    jacobi_eigenvalues,
    merris_q_bound,
    power_iterate,
    q_radius,
    q_radius_batch,
    signless_matrix,
)

from test_graph import graphs


@pytest.mark.parametrize(
    "g,q,rho",
    [
        (complete(4), 6.0, 3.0),
        (path(3), 3.0, math.sqrt(2)),
        (cycle(6), 4.0, 2.0),
        (complete_bipartite(1, 4), 5.0, 2.0),
        (complete_bipartite(2, 3), 5.0, math.sqrt(6)),
        (petersen(), 6.0, 3.0),
        (Graph(3, (0, 0, 0)), 0.0, 0.0),
    ],
)
def test_closed_forms(g, q, rho):
    assert q_radius(g).value == pytest.approx(q, abs=1e-9)
    assert adj_radius(g).value == pytest.approx(rho, abs=1e-9)


def test_estimate_is_certified():
    est = q_radius(path(6))
    true = max(dense_eigen_oracle(path(6)))
    assert est.converged and est.lower <= true + 1e-12
    assert true <= est.value + est.residual


def test_jacobi_against_numpy():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(5, 7, 7))
    m = x + x.transpose(0, 2, 1)
    ours = jacobi_eigenvalues(m)
    ref = np.sort(np.linalg.eigvalsh(m), axis=1)[:, ::-1]
    assert np.allclose(ours, ref, atol=1e-10)
    assert np.allclose(jacobi_eigenvalues(m[0]), ref[0], atol=1e-10)


@given(graphs(max_n=8))
@settings(max_examples=150)
def test_power_iteration_matches_oracle(g):
    assert q_radius(g).value == pytest.approx(dense_eigen_oracle(g, "signless")[0], abs=1e-8)
    assert adj_radius(g).value == pytest.approx(dense_eigen_oracle(g, "adjacency")[0], abs=1e-8)


def test_batch_independent_of_composition():
    gs = [path(6), cycle(6), complete_bipartite(2, 4), complete(6)]
    a = np.stack([g.matrix() for g in gs])
    whole = q_radius_batch(a).value
    single = np.array([q_radius_batch(x[None]).value[0] for x in a])
    assert np.array_equal(whole, single)
    assert np.array_equal(adj_radius_batch(a[::-1]).value[::-1], adj_radius_batch(a).value)


def test_bipartite_adjacency_converges():
    # the A + I shift avoids oscillation between +rho and -rho
    est = adj_radius(path(2))
    assert est.converged and est.value == pytest.approx(1.0)


def test_merris_bound():
    g = path(4)
    assert merris_q_bound(g) >= q_radius(g).value
    with pytest.raises(ValueError):
        merris_q_bound(Graph(2, (0, 0)))


def test_power_iterate_rejects_bad_tol():
    with pytest.raises(ValueError):
        power_iterate(signless_matrix(path(3).matrix()[None]), tol=0)
