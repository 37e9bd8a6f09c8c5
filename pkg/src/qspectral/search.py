"""Hill climbing on q(G) over connected graphs under forbidden-subgraph caps.

Each climb starts from a uniformly random labeled tree (trees are
{B_1, C_4, K_{s,t}}-free, so every sensible constraint set admits them) and
scans single-edge toggles in a fresh random order per sweep.  A toggle is
kept when the graph stays connected and feasible and q strictly increases.
A sweep with no improvement is a local optimum and the climb restarts from a
new tree until its share of the budget is used.

Climbs draw from independent generators spawned from one seed, so results
are identical whether climbs run serially or in a process pool.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import bounds as B
from .forbidden import MAX_SUBSET_ORDER, is_kst_free, profile
from .graph import Graph, is_connected, pair_list
from .graph6 import from_graph6, to_graph6
from .spectra import merris_q_bound, q_radius

IMPROVE_EPS = 1e-12


class NoFeasibleStart(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    n: int
    book_cap: int | None = None  # k: every edge in at most k triangles
    pair_cap: int | None = None  # l: every pair with at most l common neighbours
    kst: tuple[int, int] | None = None
    budget: int = 2000
    restarts: int = 4
    seed: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_SUBSET_ORDER:
            raise ValueError(f"search supports 1 <= n <= {MAX_SUBSET_ORDER}, got {self.n}")
        if self.budget < 1 or self.restarts < 1:
            raise ValueError("budget and restarts must be >= 1")
        if self.book_cap is not None and self.book_cap < 0:
            raise ValueError("book cap must be >= 0")
        if self.pair_cap is not None and self.pair_cap < 0:
            raise ValueError("pair cap must be >= 0")
        if self.book_cap is not None and self.pair_cap is not None and self.book_cap > self.pair_cap:
            raise ValueError(f"book cap k={self.book_cap} exceeds pair cap l={self.pair_cap}")
        if self.kst is not None:
            s, t = self.kst
            if not s >= t >= 2:
                raise ValueError(f"K_(s,t) constraint needs s >= t >= 2, got {self.kst}")

    def feasible(self, g: Graph) -> bool:
        if not is_connected(g):
            return False
        if self.book_cap is not None or self.pair_cap is not None:
            prof = profile(g)
            if self.book_cap is not None and (prof.max_adjacent_common or 0) > self.book_cap:
                return False
            if self.pair_cap is not None and prof.max_pair_common > self.pair_cap:
                return False
        if self.kst is not None and not is_kst_free(g, *self.kst):
            return False
        return True


@dataclass(frozen=True)
class SearchResult:
    graph6: str
    q: float
    evaluations: int
    gaps: dict[str, float] = field(default_factory=dict)
    bound_violations: tuple[str, ...] = ()

    @property
    def graph(self) -> Graph:
        return from_graph6(self.graph6)


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence."""
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def _start(cfg: SearchConfig, rng: np.random.Generator, attempts: int = 100) -> Graph:
    for _ in range(attempts):
        g = random_tree(cfg.n, rng)
        if cfg.feasible(g):
            return g
    raise NoFeasibleStart(f"no feasible connected start found for {cfg}")


def _climb(args: tuple[SearchConfig, np.random.SeedSequence, int]) -> tuple[float, str, int]:
    cfg, seq, budget = args
    rng = np.random.default_rng(seq)
    pairs = pair_list(cfg.n)
    best_q, best_g6 = -np.inf, ""
    used = 0
    while used < budget:
        g = _start(cfg, rng)
        q = q_radius(g).value
        used += 1
        improved = True
        while improved and used < budget:
            improved = False
            for idx in rng.permutation(len(pairs)).tolist():
                if used >= budget:
                    break
                used += 1
                h = g.toggle(*pairs[idx])
                if not cfg.feasible(h):
                    continue
                qh = q_radius(h).value
                if qh > q + IMPROVE_EPS:
                    g, q, improved = h, qh, True
        g6 = to_graph6(g)
        if q > best_q or (q == best_q and g6 < best_g6):
            best_q, best_g6 = q, g6
    return best_q, best_g6, used


def _bound_gaps(cfg: SearchConfig, g: Graph, q: float) -> dict[str, float]:
    gaps: dict[str, float] = {}
    delta, n = g.max_degree, g.n
    k, l = cfg.book_cap, cfg.pair_cap
    if k is not None and l is not None and B.thm1_applies(g, k, l):
        gaps["thm1"] = B.thm1_bound(delta, k, l, n) - q
    if k is not None and B.cor1_applies(g, k):
        gaps["cor1"] = B.cor1_bound(delta, k, n) - q
    if l is not None and B.cor2_applies(g, l):
        gaps["cor2"] = B.cor2_bound(delta, l, n) - q
    if cfg.kst is not None and B.thm2_applies(g, *cfg.kst):
        gaps["thm2"] = B.thm2_bound(n, *cfg.kst) - q
    if g.min_degree >= 1:
        gaps["lem5"] = merris_q_bound(g) - q
    return gaps


def extremal_search(cfg: SearchConfig, jobs: int = 1) -> SearchResult:
    """Best q found under ``cfg``; deterministic for a fixed seed."""
    seqs = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    share = [cfg.budget // cfg.restarts + (1 if i < cfg.budget % cfg.restarts else 0) for i in range(cfg.restarts)]
    tasks = [(cfg, s, b) for s, b in zip(seqs, share) if b > 0]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_climb, tasks))
    else:
        outcomes = [_climb(t) for t in tasks]
    best_q, best_g6, _ = min(outcomes, key=lambda o: (-o[0], o[1]))
    used = sum(u for _, _, u in outcomes)
    result = SearchResult(best_g6, best_q, used)
    g = result.graph
    gaps = _bound_gaps(cfg, g, best_q)
    flagged = tuple(sorted(f for f, gap in gaps.items() if gap < -1e-8))
    return SearchResult(best_g6, best_q, used, gaps, flagged)

