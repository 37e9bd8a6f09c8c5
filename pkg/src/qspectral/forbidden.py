"""Books, complete bipartite subgraphs and strong regularity via common neighbours.

A graph is B_{k+1}-free exactly when every edge has at most ``k`` common
neighbours, and K_{s,t}-free (s >= t) exactly when no ``t`` vertices have
``s`` common neighbours.  Everything here is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Graph

MAX_SUBSET_T = 4
MAX_SUBSET_ORDER = 24


class UnsupportedSize(ValueError):
    """Raised when a t-subset scan would exceed the supported caps."""


@dataclass(frozen=True)
class ForbiddenProfile:
    """Common-neighbourhood maxima of a graph.

    ``max_adjacent_common`` is ``None`` for edgeless graphs and
    ``max_nonadjacent_common`` is ``None`` for complete graphs.
    """

    max_adjacent_common: int | None
    max_nonadjacent_common: int | None
    tsubset_max: dict[int, int] = field(default_factory=dict)

    @property
    def max_pair_common(self) -> int:
        vals = [v for v in (self.max_adjacent_common, self.max_nonadjacent_common) if v is not None]
        return max(vals, default=0)


@dataclass(frozen=True)
class SrgParams:
    n: int
    k_reg: int
    a: int
    c: int


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for n={g.n}")


def common_neighbors(g: Graph, u: int, v: int) -> int:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return (g.adj[u] & g.adj[v]).bit_count()


def _check_subset_scan(g: Graph, t: int) -> None:
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    if t > 2 and (t > MAX_SUBSET_T or g.n > MAX_SUBSET_ORDER):
        raise UnsupportedSize(
            f"t-subset scan supports t <= {MAX_SUBSET_T} and n <= {MAX_SUBSET_ORDER} (got t={t}, n={g.n})"
        )


def _subset_commons(g: Graph, t: int) -> Iterable[int]:
    full = (1 << g.n) - 1
    for subset in combinations(range(g.n), t):
        common = full
        for u in subset:
            common &= g.adj[u]
        yield common.bit_count()


def tsubset_max(g: Graph, t: int) -> int:
    """Largest common neighbourhood over all ``t``-vertex subsets."""
    _check_subset_scan(g, t)
    if t > g.n:
        raise ValueError(f"t={t} exceeds the order n={g.n}")
    return max(_subset_commons(g, t))


def profile(g: Graph, ts: Iterable[int] = ()) -> ForbiddenProfile:
    adjacent: int | None = None
    nonadjacent: int | None = None
    for u, v in combinations(range(g.n), 2):
        c = (g.adj[u] & g.adj[v]).bit_count()
        if g.adj[u] >> v & 1:
            adjacent = c if adjacent is None else max(adjacent, c)
        else:
            nonadjacent = c if nonadjacent is None else max(nonadjacent, c)
    return ForbiddenProfile(adjacent, nonadjacent, {t: tsubset_max(g, t) for t in sorted(set(ts))})


def is_kst_free(g: Graph, s: int, t: int) -> bool:
    """True iff ``g`` has no (not necessarily induced) K_{s,t}, ``s >= t >= 2``."""
    if t < 2 or s < t:
        raise ValueError(f"need s >= t >= 2, got s={s}, t={t}")
    _check_subset_scan(g, t)
    if s + t > g.n:
        return True
    return all(c < s for c in _subset_commons(g, t))


def is_book_free(g: Graph, k_plus_1: int) -> bool:
    """True iff no edge lies in ``k_plus_1`` triangles (g is B_{k_plus_1}-free)."""
    if k_plus_1 < 1:
        raise ValueError(f"book needs at least one page, got {k_plus_1}")
    adj = profile(g).max_adjacent_common
    return adj is None or adj <= k_plus_1 - 1


def is_c4_free(g: Graph) -> bool:
    return profile(g).max_pair_common <= 1


def srg_params(g: Graph) -> SrgParams | None:
    """Exact strongly-regular parameters, or ``None`` if the definition fails."""
    if not g.is_regular():
        return None
    adjacent: set[int] = set()
    nonadjacent: set[int] = set()
    for u, v in combinations(range(g.n), 2):
        c = (g.adj[u] & g.adj[v]).bit_count()
        (adjacent if g.adj[u] >> v & 1 else nonadjacent).add(c)
        if len(adjacent) > 1 or len(nonadjacent) > 1:
            return None
    if len(adjacent) != 1 or len(nonadjacent) != 1:
        return None
    (a,), (c,) = adjacent, nonadjacent
    if c < 1:
        return None
    return SrgParams(g.n, g.degrees[0], a, c)


# ---------------------------------------------------------------------------
# Vectorised statistics over adjacency stacks (shape (B, n, n))


def pair_common_stats(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Max common neighbours over adjacent and over nonadjacent pairs.

    Absent pair kinds are reported as -1.
    """
    a16 = a.astype(np.int16)
    common = np.matmul(a16, a16)
    n = a.shape[1]
    edge = a != 0
    nonedge = ~edge & ~np.eye(n, dtype=bool)
    adj_max = np.where(edge, common, -1).reshape(len(a), -1).max(axis=1, initial=-1)
    non_max = np.where(nonedge, common, -1).reshape(len(a), -1).max(axis=1, initial=-1)
    return adj_max, non_max


def tsubset_max_batch(a: np.ndarray, t: int) -> np.ndarray:
    n = a.shape[1]
    if t > n:
        return np.full(len(a), -1, dtype=np.int64)
    combos = np.array(list(combinations(range(n), t)))
    best = np.full(len(a), -1, dtype=np.int64)
    edge = a != 0
    step = max(1, 4096 // n)
    for lo in range(0, len(combos), step):
        block = combos[lo : lo + step]
        shared = edge[:, block, :].all(axis=2).sum(axis=2)
        best = np.maximum(best, shared.max(axis=1))
    return best
