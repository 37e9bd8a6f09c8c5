"""Simple undirected graphs stored as per-vertex adjacency bitsets.

Vertex ``u``'s neighbourhood is the Python int ``adj[u]`` with bit ``v`` set
when ``uv`` is an edge, so common-neighbour counts reduce to
``(adj[u] & adj[v]).bit_count()``.  Edge masks index vertex pairs in the
upper-triangle column order used by graph6: (0,1), (0,2), (1,2), (0,3), ...
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

MAX_ENUM_ORDER = 8


def popcount(x: int) -> int:
    return x.bit_count()


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs ``(i, j)``, ``i < j``, in column order."""
    return tuple((i, j) for j in range(n) for i in range(j))


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph order must be >= 1, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n if n >= 0 else []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge ({u}, {u})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        if not 0 <= mask < 1 << (n * (n - 1) // 2):
            raise ValueError(f"edge mask out of range for n={n}")
        adj = [0] * n
        rest = mask
        for i, j in pair_list(n):
            if rest & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            rest >>= 1
        # symmetric by construction, so skip the validating constructor
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        g.__dict__["mask"] = mask
        return g

    @classmethod
    def from_matrix(cls, a: np.ndarray) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        adj = []
        for u in range(n):
            row = 0
            for v in np.flatnonzero(a[u]):
                row |= 1 << int(v)
            adj.append(row)
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return [v for v in range(self.n) if self.adj[u] >> v & 1]

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(row) for row in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in pair_list(self.n) if self.adj[i] >> j & 1]

    @cached_property
    def mask(self) -> int:
        m = 0
        for b, (i, j) in enumerate(pair_list(self.n)):
            if self.adj[i] >> j & 1:
                m |= 1 << b
        return m

    def matrix(self, dtype=np.int8) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def is_regular(self) -> bool:
        return len(set(self.degrees)) == 1

    def toggle(self, u: int, v: int) -> "Graph":
        """Copy with the pair ``uv`` flipped between edge and non-edge."""
        if u == v:
            raise ValueError("cannot toggle a loop")
        adj = list(self.adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``u`` renamed ``perm[u]``."""
        return Graph.from_edges(self.n, ((perm[i], perm[j]) for i, j in self.edges()))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    sequence: tuple[int, ...]


def degree_stats(g: Graph) -> DegreeStats:
    return DegreeStats(g.max_degree, g.min_degree, g.degrees)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# Named families


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    _require(s >= 1 and t >= 1, "complete bipartite graph needs s, t >= 1")
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def book(k: int) -> Graph:
    """B_k: ``k`` triangles sharing the hub edge (0, 1); order k + 2."""
    _require(k >= 1, "book needs at least one page")
    edges = [(0, 1)]
    for p in range(2, k + 2):
        edges += [(0, p), (1, p)]
    return Graph.from_edges(k + 2, edges)


def friendship(n: int) -> Graph:
    """F_n on ``n`` vertices with centre 0.

    Odd ``n`` gives ``n // 2`` triangles through vertex 0; even ``n`` adds a
    pendant vertex ``n - 1`` hung on the centre of F_{n-1}.
    """
    _require(n >= 3, "friendship graph needs n >= 3")
    odd = n if n % 2 else n - 1
    edges = []
    for b in range(1, odd, 2):
        edges += [(0, b), (0, b + 1), (b, b + 1)]
    if n % 2 == 0:
        edges.append((0, n - 1))
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def rook(m: int) -> Graph:
    """m x m rook's graph; cell (r, c) is vertex r * m + c."""
    _require(m >= 1, "rook graph needs m >= 1")
    cells = [(r, c) for r in range(m) for c in range(m)]
    edges = [
        (a, b)
        for a, b in combinations(range(m * m), 2)
        if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]
    ]
    return Graph.from_edges(m * m, edges)


def triangular(m: int) -> Graph:
    """Line graph of K_m."""
    _require(m >= 2, "triangular graph needs m >= 2")
    verts = list(combinations(range(m), 2))
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2) if set(verts[a]) & set(verts[b])]
    return Graph.from_edges(len(verts), edges)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


_FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "book": (book, 1),
    "friendship": (friendship, 1),
    "petersen": (petersen, 0),
    "rook": (rook, 1),
    "triangular": (triangular, 1),
}

FAMILY_NAMES = tuple(_FAMILIES)


@dataclass(frozen=True)
class GraphFamily:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.name not in _FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {FAMILY_NAMES}")
        arity = _FAMILIES[self.name][1]
        if len(self.params) != arity:
            raise ValueError(f"family {self.name!r} takes {arity} parameter(s), got {len(self.params)}")


def make_family(family: GraphFamily | str, *params: int) -> Graph:
    if isinstance(family, str):
        family = GraphFamily(family, tuple(params))
    ctor = _FAMILIES[family.name][0]
    return ctor(*family.params)


# ---------------------------------------------------------------------------
# Labeled enumeration, vectorised over edge masks


def masks_to_adjacency(masks: np.ndarray, n: int) -> np.ndarray:
    """Stack of 0/1 adjacency matrices, shape ``(len(masks), n, n)``."""
    masks = np.asarray(masks, dtype=np.uint64)
    a = np.zeros((masks.size, n, n), dtype=np.int8)
    for b, (i, j) in enumerate(pair_list(n)):
        bit = ((masks >> np.uint64(b)) & np.uint64(1)).astype(np.int8)
        a[:, i, j] = bit
        a[:, j, i] = bit
    return a


def batch_is_connected(a: np.ndarray) -> np.ndarray:
    """Connectivity of each graph in an adjacency stack."""
    b, n, _ = a.shape
    if n == 1:
        return np.ones(b, dtype=bool)
    reach = (a != 0) | np.eye(n, dtype=bool)
    steps = 1
    while steps < n - 1:
        r = reach.astype(np.int16)
        reach = np.matmul(r, r) > 0
        steps *= 2
    return reach[:, 0, :].all(axis=1)


def adjacency_chunks(
    n: int,
    connected_only: bool = False,
    chunk_size: int = 1 << 16,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(masks, adjacency_stack)`` blocks covering masks ``[start, stop)``."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"enumeration order must be in 1..{MAX_ENUM_ORDER}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    for lo in range(start, stop, chunk_size):
        masks = np.arange(lo, min(lo + chunk_size, stop), dtype=np.uint64)
        a = masks_to_adjacency(masks, n)
        if connected_only:
            keep = batch_is_connected(a)
            masks, a = masks[keep], a[keep]
        if masks.size:
            yield masks, a


def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, in increasing edge-mask order."""
    for masks, _ in adjacency_chunks(n, connected_only):
        for m in masks.tolist():
            yield Graph.from_mask(n, m)
