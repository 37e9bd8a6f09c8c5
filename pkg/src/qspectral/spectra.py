"""Largest eigenvalues of A(G) and Q(G) = D(G) + A(G).

Both radii come from power iteration started at the all-ones vector and
stopped on the residual ``||Mx - mu x||`` of the unit iterate ``x``.  The
reported value is always the Rayleigh quotient ``mu = x'Mx``, which can
never exceed the true largest eigenvalue of a symmetric matrix, so it doubles
as a certified lower bound.

The kernels work on stacks of adjacency matrices so exhaustive sweeps over
millions of small graphs stay vectorised.  Each graph's arithmetic touches
only its own row of the stack, so results do not depend on how graphs are
batched.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

DEFAULT_TOL = 1e-10
ORACLE_MAX_ORDER = 12


@dataclass(frozen=True)
class SpectralEstimate:
    value: float
    lower: float
    residual: float
    iterations: int
    converged: bool
    vector: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class BatchEstimate:
    """Per-graph arrays for a stack of graphs."""

    value: np.ndarray
    residual: np.ndarray
    iterations: np.ndarray
    converged: np.ndarray
    vector: np.ndarray

    def __len__(self) -> int:
        return self.value.size

    def item(self, i: int) -> SpectralEstimate:
        v = float(self.value[i])
        return SpectralEstimate(
            value=v,
            lower=v,
            residual=float(self.residual[i]),
            iterations=int(self.iterations[i]),
            converged=bool(self.converged[i]),
            vector=self.vector[i].copy(),
        )


def max_iterations(n: int) -> int:
    return 100 * n + 1000


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")


def _as_stack(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim == 2:
        a = a[None]
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected an (n, n) matrix or (B, n, n) stack, got shape {a.shape}")
    if a.shape[1] < 1:
        raise ValueError("graphs need at least one vertex")
    return a


def power_iterate(m: np.ndarray, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> BatchEstimate:
    """Power iteration on each symmetric nonnegative matrix of a stack."""
    _check_tol(tol)
    m = np.asarray(_as_stack(m), dtype=np.float64)
    b, n, _ = m.shape
    if max_iter is None:
        max_iter = max_iterations(n)

    value = np.zeros(b)
    residual = np.zeros(b)
    iterations = np.zeros(b, dtype=np.int64)
    converged = np.zeros(b, dtype=bool)
    vector = np.empty((b, n))

    active = np.arange(b)
    x = np.full((b, n), 1.0 / np.sqrt(n))
    ma = m
    for it in range(1, max_iter + 1):
        y = (ma * x[:, None, :]).sum(axis=2)
        mu = (x * y).sum(axis=1)
        r = np.sqrt(((y - mu[:, None] * x) ** 2).sum(axis=1))
        done = r <= tol
        stop = done if it < max_iter else np.ones_like(done)
        if stop.any():
            idx = active[stop]
            value[idx] = mu[stop]
            residual[idx] = r[stop]
            iterations[idx] = it
            converged[idx] = done[stop]
            vector[idx] = x[stop]
            keep = ~stop
            if not keep.any():
                break
            active, ma, x, y = active[keep], ma[keep], x[keep], y[keep]
        x = y / np.sqrt((y * y).sum(axis=1))[:, None]
    return BatchEstimate(value, residual, iterations, converged, vector)


def _radius_batch(a: np.ndarray, tol: float, signless: bool) -> BatchEstimate:
    _check_tol(tol)
    a = _as_stack(a)
    b, n, _ = a.shape
    deg = a.sum(axis=2)
    reg = (deg == deg[:, :1]).all(axis=1)
    todo = np.flatnonzero(~reg)
    out = BatchEstimate(
        value=np.zeros(b),
        residual=np.zeros(b),
        iterations=np.zeros(b, dtype=np.int64),
        converged=np.ones(b, dtype=bool),
        vector=np.full((b, n), 1.0 / np.sqrt(n)),
    )
    if todo.size:
        m = a[todo].astype(np.float64)
        diag = deg[todo].astype(np.float64) if signless else np.ones((todo.size, n))
        idx = np.arange(n)
        m[:, idx, idx] = diag
        est = power_iterate(m, tol)
        out.value[todo] = est.value if signless else est.value - 1.0
        out.residual[todo] = est.residual
        out.iterations[todo] = est.iterations
        out.converged[todo] = est.converged
        out.vector[todo] = est.vector
    # k-regular: constant row sums make 2k (resp. k) exact, with the all-ones vector
    reg_idx = np.flatnonzero(reg)
    out.value[reg_idx] = (2 if signless else 1) * deg[reg_idx, 0]
    return out


def q_radius_batch(a: np.ndarray, tol: float = DEFAULT_TOL) -> BatchEstimate:
    """Signless Laplacian radius for every graph in an adjacency stack."""
    return _radius_batch(a, tol, signless=True)


def adj_radius_batch(a: np.ndarray, tol: float = DEFAULT_TOL) -> BatchEstimate:
    """Adjacency radius for every graph in a stack, iterating on A + I."""
    return _radius_batch(a, tol, signless=False)


def q_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralEstimate:
    return q_radius_batch(g.matrix(), tol).item(0)


def adj_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralEstimate:
    return adj_radius_batch(g.matrix(), tol).item(0)


def merris_q_bound(g: Graph) -> float:
    """max over u of d(u) + (sum of neighbour degrees) / d(u)."""
    deg = g.degrees
    if min(deg) == 0:
        raise ValueError("degree bound is undefined on graphs with an isolated vertex")
    return max(deg[u] + sum(deg[v] for v in g.neighbors(u)) / deg[u] for u in range(g.n))


def merris_q_bound_batch(a: np.ndarray) -> np.ndarray:
    """Vectorised degree bound; NaN for graphs with an isolated vertex."""
    a = _as_stack(a).astype(np.float64)
    deg = a.sum(axis=2)
    nbr = (a * deg[:, None, :]).sum(axis=2)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = deg + nbr / deg
    out = terms.max(axis=1)
    out[(deg == 0).any(axis=1)] = np.nan
    return out


# ---------------------------------------------------------------------------
# Dense verification oracle


def jacobi_eigenvalues(m: np.ndarray, off_tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of symmetric matrices by cyclic plane rotations.

    Accepts one matrix or a stack; returns eigenvalues sorted descending with
    shape ``(n,)`` or ``(B, n)``.  Sweeps continue until every matrix has
    off-diagonal Frobenius norm at most ``off_tol``.
    """
    m = np.asarray(m, dtype=np.float64)
    single = m.ndim == 2
    a = _as_stack(m).copy()
    b, n, _ = a.shape
    offdiag = ~np.eye(n, dtype=bool)

    def off_norm(x: np.ndarray) -> np.ndarray:
        return np.sqrt((x[:, offdiag] ** 2).sum(axis=1))

    for _ in range(max_sweeps):
        if (off_norm(a) <= off_tol).all():
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                nz = apq != 0
                if not nz.any():
                    continue
                safe = np.where(nz, apq, 1.0)
                with np.errstate(over="ignore", divide="ignore"):
                    theta = (a[:, q, q] - a[:, p, p]) / (2.0 * safe)
                    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
                # huge |theta| means a negligible angle; t underflows to 0 there
                t = np.where(nz & np.isfinite(t), t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                cc, ss = c[:, None], s[:, None]
                colp, colq = a[:, :, p].copy(), a[:, :, q].copy()
                a[:, :, p] = cc * colp - ss * colq
                a[:, :, q] = ss * colp + cc * colq
                rowp, rowq = a[:, p, :].copy(), a[:, q, :].copy()
                a[:, p, :] = cc * rowp - ss * rowq
                a[:, q, :] = ss * rowp + cc * rowq
                a[:, p, q] = 0.0
                a[:, q, p] = 0.0
    else:
        if not (off_norm(a) <= off_tol).all():
            raise RuntimeError("Jacobi sweeps did not reach the off-diagonal tolerance")

    eig = -np.sort(-np.diagonal(a, axis1=1, axis2=2), axis=1)
    return eig[0] if single else eig


def signless_matrix(a: np.ndarray) -> np.ndarray:
    a = _as_stack(a).astype(np.float64)
    idx = np.arange(a.shape[1])
    a[:, idx, idx] = a.sum(axis=2)
    return a


def dense_eigen_oracle(g: Graph, which: str = "signless") -> list[float]:
    """Full spectrum of A(G) or Q(G), sorted descending (test support, n <= 12)."""
    if g.n > ORACLE_MAX_ORDER:
        raise ValueError(f"dense oracle is capped at n <= {ORACLE_MAX_ORDER}")
    if which == "signless":
        m = signless_matrix(g.matrix())[0]
    elif which == "adjacency":
        m = g.matrix().astype(np.float64)
    else:
        raise ValueError(f"which must be 'adjacency' or 'signless', got {which!r}")
    return jacobi_eigenvalues(m).tolist()
