"""Closed-form spectral and edge bounds for book-free and K_{s,t}-free graphs.

Each public ``*_bound`` validates its integer hypotheses and raises
:class:`HypothesisError` instead of returning a number outside its range of
validity.  The underscored ``_expr`` helpers are the bare expressions; they
broadcast over numpy arrays and are what the audit engine evaluates in bulk.

Formula ids
-----------
``thm1``            q bound for {B_{k+1}, K_{2,l+1}}-free graphs with max degree Δ
``cor1``            q bound from the book cap alone (B_{k+1}-free)
``cor2``            q bound from the pair cap alone (K_{2,l+1}-free); neither
                    single-cap form equals ``thm1`` at ``l = Δ`` or ``k = l``
                    unless ``Δ = n - 1``
``thm2``            q bound for K_{s,t}-free graphs, ``s >= t >= 3``
``lem1_printed``    ρ bound with radicand ``(k-l)^2 + 4Δ + 4l(n-l)``
``lem1_corrected``  same with ``4l(n-1)``; equals Δ exactly on SRG(n, Δ, k, l)
``lem2``            ρ <= min{Δ, (k-l+1 + sqrt((k-l+1)^2 + 4l(n-1)))/2}
``lem3_rho``        ρ bound for K_{s,t}-free graphs, separate t = 2 branch
``lem3_edge``       edge bound for K_{s,t}-free graphs, ``t >= 3``
``zarankiewicz_edge`` the same edge expression for ``t >= 2``
``lem4_bipartite``  edge bound for bipartite G(A, B) without K_{s,t} oriented s-in-A
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .forbidden import is_book_free, is_kst_free, profile
from .graph import Graph, is_connected


class HypothesisError(ValueError):
    """Parameters fall outside a bound's hypotheses."""


def _ints(**kw: Any) -> None:
    for name, v in kw.items():
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise HypothesisError(f"{name} must be an integer, got {v!r}")


def _need(cond: bool, reason: str) -> None:
    if not cond:
        raise HypothesisError(reason)


# ---------------------------------------------------------------------------
# Bare expressions (broadcast over arrays)


def _thm1_expr(delta, k, l, n):
    b = 3 * delta + k - 2 * l + 1
    return (b + np.sqrt(b * b + 16 * l * (delta + n - 1))) / 4


def _cor1_expr(delta, k, n):
    b = delta + k + 1
    return (b + np.sqrt(b * b + 32 * delta * (n - 1))) / 4


def _cor2_expr(delta, l, n):
    b = 3 * delta - l + 1
    return (b + np.sqrt(b * b + 32 * l * (n - 1))) / 4


def _thm2_expr(n, s, t):
    return n + (s - t + 1) ** (1 / t) * n ** (1 - 1 / t) + (t - 1) * (n - 1) ** (1 - 3 / t) + t - 3


def _lem1_printed_expr(delta, k, l, n):
    d = k - l
    return (d + np.sqrt(d * d + 4 * delta + 4 * l * (n - l))) / 2


def _lem1_corrected_expr(delta, k, l, n):
    d = k - l
    return (d + np.sqrt(d * d + 4 * delta + 4 * l * (n - 1))) / 2


def _lem2_expr(delta, k, l, n):
    d = k - l + 1
    return np.minimum(delta, (d + np.sqrt(d * d + 4 * l * (n - 1))) / 2)


def _lem3_rho_expr(n, s, t):
    if t == 2:
        return 0.5 + np.sqrt((s - 1) * (n - 1) + 0.25)
    return (s - t + 1) ** (1 / t) * n ** (1 - 1 / t) + (t - 1) * n ** (1 - 2 / t) + t - 2


def _edge_expr(n, s, t):
    return 0.5 * (s - t + 1) ** (1 / t) * n ** (2 - 1 / t) + 0.5 * (t - 1) * n ** (2 - 2 / t) + 0.5 * (t - 2) * n


def _lem4_expr(size_a, size_b, s, t, k):
    return (s - k - 1) ** (1 / t) * size_b * size_a ** (1 - 1 / t) + (t - 1) * size_a ** (1 + k / t) + k * size_b


# ---------------------------------------------------------------------------
# Checked evaluators


def thm1_bound(delta: int, k: int, l: int, n: int, *, check: bool = True) -> float:
    """Upper bound on q(G) for connected {B_{k+1}, K_{2,l+1}}-free G.

    ``check=False`` skips the hypothesis test, e.g. to evaluate the
    ``l = Δ`` substitution that yields :func:`cor1_bound`.
    """
    if check:
        _ints(delta=delta, k=k, l=l, n=n)
        _need(1 < k <= l < delta < n, f"need 1 < k <= l < delta < n, got k={k}, l={l}, delta={delta}, n={n}")
    return float(_thm1_expr(delta, k, l, n))


def cor1_bound(delta: int, k: int, n: int) -> float:
    _ints(delta=delta, k=k, n=n)
    _need(1 < k < delta < n, f"need 1 < k < delta < n, got k={k}, delta={delta}, n={n}")
    return float(_cor1_expr(delta, k, n))


def cor2_bound(delta: int, l: int, n: int) -> float:
    _ints(delta=delta, l=l, n=n)
    _need(1 < l < delta < n, f"need 1 < l < delta < n, got l={l}, delta={delta}, n={n}")
    return float(_cor2_expr(delta, l, n))


def thm2_bound(n: int, s: int, t: int) -> float:
    _ints(n=n, s=s, t=t)
    _need(s >= t >= 3, f"need s >= t >= 3, got s={s}, t={t}")
    _need(n >= s + t, f"need n >= s + t, got n={n}, s + t={s + t}")
    return float(_thm2_expr(n, s, t))


def _lem1_check(delta: int, k: int, l: int, n: int) -> None:
    _ints(delta=delta, k=k, l=l, n=n)
    _need(0 <= k <= l <= delta < n, f"need 0 <= k <= l <= delta < n, got k={k}, l={l}, delta={delta}, n={n}")


def lem1_bound_printed(delta: int, k: int, l: int, n: int) -> float:
    _lem1_check(delta, k, l, n)
    return float(_lem1_printed_expr(delta, k, l, n))


def lem1_bound_corrected(delta: int, k: int, l: int, n: int) -> float:
    _lem1_check(delta, k, l, n)
    return float(_lem1_corrected_expr(delta, k, l, n))


def lem2_bound(delta: int, k: int, l: int, n: int) -> float:
    _ints(delta=delta, k=k, l=l, n=n)
    _need(l >= k >= 0, f"need l >= k >= 0, got k={k}, l={l}")
    _need(n >= 2, f"need n >= 2, got n={n}")
    _need(0 <= delta < n, f"need 0 <= delta < n, got delta={delta}, n={n}")
    return float(_lem2_expr(delta, k, l, n))


def lem3_rho_bound(n: int, s: int, t: int) -> float:
    _ints(n=n, s=s, t=t)
    _need(s >= t >= 2, f"need s >= t >= 2, got s={s}, t={t}")
    _need(n >= 1, f"need n >= 1, got n={n}")
    return float(_lem3_rho_expr(n, s, t))


def lem3_edge_bound(n: int, s: int, t: int) -> float:
    _ints(n=n, s=s, t=t)
    _need(s >= t >= 3, f"need s >= t >= 3, got s={s}, t={t}")
    _need(n >= 1, f"need n >= 1, got n={n}")
    return float(_edge_expr(n, s, t))


def zarankiewicz_edge_bound(n: int, s: int, t: int) -> float:
    _ints(n=n, s=s, t=t)
    _need(s >= t >= 2, f"need s >= t >= 2, got s={s}, t={t}")
    _need(n >= 1, f"need n >= 1, got n={n}")
    return float(_edge_expr(n, s, t))


def lem4_bipartite_bound(size_a: int, size_b: int, s: int, t: int, k: int) -> float:
    _ints(size_a=size_a, size_b=size_b, s=s, t=t, k=k)
    _need(s >= 2 and t >= 2, f"need s, t >= 2, got s={s}, t={t}")
    _need(0 <= k <= s - 2, f"need 0 <= k <= s - 2, got k={k}, s={s}")
    _need(size_a >= 0 and size_b >= 0, "part sizes must be nonnegative")
    return float(_lem4_expr(size_a, size_b, s, t, k))


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class FormulaSpec:
    func: Callable[..., float]
    params: tuple[str, ...]
    subject: str  # "q", "rho", "edges" or "bipartite_edges"


FORMULAS: dict[str, FormulaSpec] = {
    "thm1": FormulaSpec(thm1_bound, ("delta", "k", "l", "n"), "q"),
    "cor1": FormulaSpec(cor1_bound, ("delta", "k", "n"), "q"),
    "cor2": FormulaSpec(cor2_bound, ("delta", "l", "n"), "q"),
    "thm2": FormulaSpec(thm2_bound, ("n", "s", "t"), "q"),
    "lem1_printed": FormulaSpec(lem1_bound_printed, ("delta", "k", "l", "n"), "rho"),
    "lem1_corrected": FormulaSpec(lem1_bound_corrected, ("delta", "k", "l", "n"), "rho"),
    "lem2": FormulaSpec(lem2_bound, ("delta", "k", "l", "n"), "rho"),
    "lem3_rho": FormulaSpec(lem3_rho_bound, ("n", "s", "t"), "rho"),
    "lem3_edge": FormulaSpec(lem3_edge_bound, ("n", "s", "t"), "edges"),
    "zarankiewicz_edge": FormulaSpec(zarankiewicz_edge_bound, ("n", "s", "t"), "edges"),
    "lem4_bipartite": FormulaSpec(lem4_bipartite_bound, ("size_a", "size_b", "s", "t", "k"), "bipartite_edges"),
}


@dataclass(frozen=True)
class BoundResult:
    formula: str
    params: dict[str, int]
    value: float
    hypothesis_ok: bool
    reason: str = ""
    subject: str = field(default="", compare=False)


def evaluate(formula: str, **params: int) -> BoundResult:
    """Evaluate a formula by id, reporting (not raising) hypothesis failures."""
    if formula not in FORMULAS:
        raise KeyError(f"unknown formula {formula!r}; expected one of {sorted(FORMULAS)}")
    spec = FORMULAS[formula]
    missing = [p for p in spec.params if p not in params]
    extra = [p for p in params if p not in spec.params]
    if missing or extra:
        raise TypeError(f"{formula} takes parameters {spec.params}; missing {missing}, unexpected {extra}")
    ordered = {p: params[p] for p in spec.params}
    try:
        value = spec.func(**ordered)
    except HypothesisError as exc:
        return BoundResult(formula, ordered, math.nan, False, str(exc), spec.subject)
    return BoundResult(formula, ordered, value, True, "", spec.subject)


# ---------------------------------------------------------------------------
# Hypothesis checks on concrete graphs


def _pair_free(g: Graph, k: int, l: int) -> bool:
    """B_{k+1}-free and K_{2,l+1}-free, vacuous over missing pair kinds."""
    prof = profile(g)
    adj_ok = prof.max_adjacent_common is None or prof.max_adjacent_common <= k
    return adj_ok and prof.max_pair_common <= l


def thm1_applies(g: Graph, k: int, l: int) -> bool:
    delta = g.max_degree
    return 1 < k <= l < delta < g.n and is_connected(g) and _pair_free(g, k, l)


def cor1_applies(g: Graph, k: int) -> bool:
    delta = g.max_degree
    return 1 < k < delta < g.n and is_connected(g) and is_book_free(g, k + 1)


def cor2_applies(g: Graph, l: int) -> bool:
    delta = g.max_degree
    return 1 < l < delta < g.n and is_connected(g) and profile(g).max_pair_common <= l


def thm2_applies(g: Graph, s: int, t: int) -> bool:
    return s >= t >= 3 and g.n >= s + t and is_connected(g) and is_kst_free(g, s, t)


def lem1_applies(g: Graph, k: int, l: int) -> bool:
    delta = g.max_degree
    return 0 <= k <= l <= delta < g.n and is_connected(g) and _pair_free(g, k, l)


def lem2_applies(g: Graph, k: int, l: int) -> bool:
    return l >= k >= 0 and g.n >= 2 and _pair_free(g, k, l)


def lem3_applies(g: Graph, s: int, t: int) -> bool:
    return s >= t >= 2 and is_kst_free(g, s, t)


def lem2_equality_condition(g: Graph, k: int, l: int) -> int | None:
    """Which of the two equality conditions of the ρ <= min{Δ, ...} bound holds.

    Returns 1 (Δ-regular with Δ² - Δ(k-l+1) <= l(n-1)), 2 (adjacent pairs
    share exactly ``k`` neighbours, nonadjacent pairs exactly ``l``, and the
    inequality is reversed) or ``None``.
    """
    delta = g.max_degree
    lhs = delta * delta - delta * (k - l + 1)
    rhs = l * (g.n - 1)
    if lhs <= rhs:
        return 1 if g.is_regular() else None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = (g.adj[u] & g.adj[v]).bit_count()
            if c != (k if g.adj[u] >> v & 1 else l):
                return None
    return 2
