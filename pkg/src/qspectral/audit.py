"""Exhaustive and corpus audits of the bounds against computed spectra.

Every admissible (graph, formula, parameters) instance receives one verdict:

* ``violation``    Rayleigh value > bound + violation_tol.  Sound, because the
                   Rayleigh quotient never exceeds the true radius.
* ``equality``     |value - bound| <= eq_rtol * max(1, bound) and the holds
                   test below passes.
* ``holds``        value + residual <= bound + violation_tol.
* ``inconclusive`` anything else.

Graphs are processed as adjacency stacks so that all instances of one
formula are evaluated with array arithmetic.  Reports from disjoint chunks
merge associatively, which is what ``jobs > 1`` relies on.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import permutations
from typing import Iterable

import numpy as np

from . import bounds as B
from .forbidden import MAX_SUBSET_ORDER, pair_common_stats, srg_params, tsubset_max_batch
from .graph import Graph, adjacency_chunks, batch_is_connected, friendship
from .graph6 import Graph6Error, read_graph6_lines, to_graph6
from .spectra import DEFAULT_TOL, adj_radius_batch, merris_q_bound_batch, q_radius, q_radius_batch

VERDICTS = ("holds", "equality", "violation", "inconclusive")
ALL_FORMULAS = (
    "thm1",
    "cor1",
    "cor2",
    "thm2",
    "lem1_printed",
    "lem1_corrected",
    "lem2",
    "lem3_rho",
    "lem3_edge",
    "zarankiewicz_edge",
    "lem5",
)
# lem1_printed is audited as a finding; a violation there is not an artifact failure
MUST_HOLD = frozenset(ALL_FORMULAS) - {"lem1_printed"}
NEEDS_CONNECTED = frozenset({"thm1", "cor1", "cor2", "thm2", "lem1_printed", "lem1_corrected"})
USES_DELTA = frozenset({"thm1", "cor1", "cor2", "lem1_printed", "lem1_corrected", "lem2"})
SUBSET_FORMULAS = ("thm2", "lem3_rho", "lem3_edge", "zarankiewicz_edge")
SUBJECT = {"lem5": "q", **{f: spec.subject for f, spec in B.FORMULAS.items()}}
DEFAULT_ST = ((2, 2), (3, 2), (3, 3), (4, 3))
EXHAUSTIVE_MAX_ORDER = 7
CSV_HEADER = ("graph6", "formula", "params", "bound", "q_or_rho", "residual", "verdict", "srg")


@dataclass(frozen=True)
class AuditConfig:
    formulas: tuple[str, ...] = ALL_FORMULAS
    st_pairs: tuple[tuple[int, int], ...] = DEFAULT_ST
    tol: float = DEFAULT_TOL
    violation_tol: float = 1e-8
    eq_rtol: float = 1e-6
    connected_only: bool = True
    keep_verdicts: tuple[str, ...] = ("equality", "violation", "inconclusive")

    def __post_init__(self) -> None:
        unknown = set(self.formulas) - set(ALL_FORMULAS)
        if unknown:
            raise ValueError(f"unknown formula(s) {sorted(unknown)}; expected a subset of {ALL_FORMULAS}")
        for s, t in self.st_pairs:
            if not s >= t >= 2:
                raise ValueError(f"(s, t) pairs need s >= t >= 2, got ({s}, {t})")
        bad = set(self.keep_verdicts) - set(VERDICTS)
        if bad:
            raise ValueError(f"unknown verdict(s) {sorted(bad)}")


@dataclass(frozen=True)
class AuditRecord:
    graph6: str
    formula: str
    params: tuple[tuple[str, int], ...]
    bound: float
    value: float
    residual: float
    verdict: str
    srg: str | None = None

    @property
    def sort_key(self) -> tuple:
        return (self.graph6, self.formula, self.params)

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "formula": self.formula,
            "params": dict(self.params),
            "bound": self.bound,
            "q_or_rho": self.value,
            "residual": self.residual,
            "verdict": self.verdict,
            "srg": self.srg,
        }


@dataclass(frozen=True)
class GapWitness:
    """Smallest ``bound - value`` seen for a formula."""

    gap: float
    n: int
    mask: int
    params: tuple[tuple[str, int], ...]

    @property
    def key(self) -> tuple:
        return (self.gap, self.n, self.mask, self.params)

    @property
    def graph6(self) -> str:
        return to_graph6(Graph.from_mask(self.n, self.mask))


@dataclass
class AuditReport:
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    gaps: dict[str, GapWitness] = field(default_factory=dict)
    records: list[AuditRecord] = field(default_factory=list)
    graphs: int = 0
    orders: tuple[int, int] | None = None
    skipped: list[tuple[int, str]] = field(default_factory=list)
    unsupported: int = 0
    wall_time: float = 0.0

    def count(self, formula: str, verdict: str) -> int:
        return self.counts.get(formula, {}).get(verdict, 0)

    def total(self, formula: str | None = None) -> int:
        fs = [formula] if formula else list(self.counts)
        return sum(sum(self.counts.get(f, {}).values()) for f in fs)

    def violations(self, formula: str | None = None) -> list[AuditRecord]:
        return [r for r in self.records if r.verdict == "violation" and (formula is None or r.formula == formula)]

    def equalities(self, formula: str | None = None) -> list[AuditRecord]:
        return [r for r in self.records if r.verdict == "equality" and (formula is None or r.formula == formula)]

    def must_hold_violations(self) -> int:
        return sum(self.count(f, "violation") for f in MUST_HOLD)

    def merge(self, other: "AuditReport") -> "AuditReport":
        counts = {f: dict(v) for f, v in self.counts.items()}
        for f, per in other.counts.items():
            dst = counts.setdefault(f, {})
            for verdict, c in per.items():
                dst[verdict] = dst.get(verdict, 0) + c
        gaps = dict(self.gaps)
        for f, w in other.gaps.items():
            if f not in gaps or w.key < gaps[f].key:
                gaps[f] = w
        orders = [o for o in (self.orders, other.orders) if o is not None]
        return AuditReport(
            counts=counts,
            gaps=gaps,
            records=self.records + other.records,
            graphs=self.graphs + other.graphs,
            orders=(min(o[0] for o in orders), max(o[1] for o in orders)) if orders else None,
            skipped=sorted(self.skipped + other.skipped),
            unsupported=self.unsupported + other.unsupported,
            wall_time=self.wall_time + other.wall_time,
        )

    def sorted_records(self) -> list[AuditRecord]:
        return sorted(self.records, key=lambda r: r.sort_key)

    def to_dict(self, include_timing: bool = True) -> dict:
        meta = {
            "graphs": self.graphs,
            "orders": list(self.orders) if self.orders else None,
            "instances": self.total(),
            "skipped": [{"line": ln, "error": msg} for ln, msg in self.skipped],
            "unsupported": self.unsupported,
        }
        if include_timing:
            meta["wall_time"] = self.wall_time
        counts = {f: {v: self.counts[f].get(v, 0) for v in VERDICTS} for f in sorted(self.counts)}
        gaps = {
            f: {"min_gap": w.gap, "graph6": w.graph6, "params": dict(w.params)}
            for f, w in sorted(self.gaps.items())
        }
        return {
            "meta": meta,
            "counts": counts,
            "gaps": gaps,
            "records": [r.as_dict() for r in self.sorted_records()],
        }

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.sorted_records():
            w.writerow([r.graph6, r.formula, r.params_text(), repr(r.bound), repr(r.value), repr(r.residual), r.verdict, r.srg or ""])
        return buf.getvalue()


# ---------------------------------------------------------------------------
# Core engine


def _srg_check(g: Graph, formula: str, params: dict[str, int]) -> str | None:
    if formula == "lem2":
        cond = B.lem2_equality_condition(g, params["k"], params["l"])
        return f"condition {cond}" if cond else "no equality condition holds"
    if formula in ("thm1", "lem1_printed", "lem1_corrected"):
        want = (params["delta"], params["k"], params["l"])
    elif formula == "cor1":
        want = (params["delta"], params["k"], params["delta"])
    elif formula == "cor2":
        want = (params["delta"], params["l"], params["l"])
    else:
        return None
    if g.n >= 2 and g.edge_count == g.n * (g.n - 1) // 2:
        # no nonadjacent pairs, so only the degree and the adjacent count can be checked
        ok = want[0] == g.n - 1 and want[1] == g.n - 2
        state = "confirmed" if ok else f"mismatch, expected parameters {want}"
        return f"degenerate SRG K_{g.n} (no nonadjacent pairs) {state}"
    srg = srg_params(g)
    if srg is None:
        return "not strongly regular"
    got = (srg.k_reg, srg.a, srg.c)
    label = f"SRG({srg.n},{srg.k_reg},{srg.a},{srg.c})"
    return f"{label} confirmed" if got == want else f"{label} mismatch, expected parameters {want}"


class _Chunk:
    """Per-chunk statistics shared by all formulas."""

    def __init__(self, a: np.ndarray, keys: list[int], config: AuditConfig):
        self.a = a
        self.keys = keys
        self.n = a.shape[1]
        deg = a.sum(axis=2)
        self.delta = deg.max(axis=1).astype(np.int64)
        self.mindeg = deg.min(axis=1)
        self.edges = (deg.sum(axis=1) // 2).astype(np.float64)
        self.connected = batch_is_connected(a)
        self.mac, self.mnc = pair_common_stats(a)
        self.pairmax = np.maximum(np.maximum(self.mac, self.mnc), 0)
        self.config = config
        self._q = None
        self._rho = None
        self._tmax: dict[int, np.ndarray] = {}

    def subject(self, name: str) -> tuple[np.ndarray, np.ndarray]:
        if name == "q":
            if self._q is None:
                self._q = q_radius_batch(self.a, self.config.tol)
            return self._q.value, self._q.residual
        if name == "rho":
            if self._rho is None:
                self._rho = adj_radius_batch(self.a, self.config.tol)
            return self._rho.value, self._rho.residual
        return self.edges, np.zeros_like(self.edges)

    def tmax(self, t: int) -> np.ndarray:
        if t == 2:
            return self.pairmax
        if t not in self._tmax:
            self._tmax[t] = tsubset_max_batch(self.a, t)
        return self._tmax[t]


def _instances(ch: _Chunk, formula: str):
    """Yield ``(params, selection mask, bound array over the selection)``."""
    n, delta = ch.n, ch.delta
    base = ch.connected if formula in NEEDS_CONNECTED else np.ones(len(delta), dtype=bool)
    if formula == "thm1":
        for k in range(2, n):
            for l in range(k, n):
                sel = base & (ch.mac <= k) & (ch.mnc <= l) & (l < delta)
                yield {"k": k, "l": l}, sel, lambda d, k=k, l=l: B._thm1_expr(d, k, l, n)
    elif formula == "cor1":
        for k in range(2, n):
            sel = base & (ch.mac <= k) & (k < delta)
            yield {"k": k}, sel, lambda d, k=k: B._cor1_expr(d, k, n)
    elif formula == "cor2":
        for l in range(2, n):
            sel = base & (ch.pairmax <= l) & (l < delta)
            yield {"l": l}, sel, lambda d, l=l: B._cor2_expr(d, l, n)
    elif formula in ("lem1_printed", "lem1_corrected", "lem2"):
        expr = {"lem1_printed": B._lem1_printed_expr, "lem1_corrected": B._lem1_corrected_expr, "lem2": B._lem2_expr}[formula]
        if formula == "lem2" and n < 2:
            return
        for k in range(0, n):
            for l in range(k, n):
                sel = base & (ch.mac <= k) & (ch.mnc <= l) & (l <= delta)
                yield {"k": k, "l": l}, sel, lambda d, k=k, l=l, expr=expr: expr(d, k, l, n)
    elif formula in ("thm2", "lem3_rho", "lem3_edge", "zarankiewicz_edge"):
        tmin = 3 if formula in ("thm2", "lem3_edge") else 2
        expr = {
            "thm2": B._thm2_expr,
            "lem3_rho": B._lem3_rho_expr,
            "lem3_edge": B._edge_expr,
            "zarankiewicz_edge": B._edge_expr,
        }[formula]
        for s, t in ch.config.st_pairs:
            if t < tmin or n < s + t:
                continue
            if t > 2 and n > MAX_SUBSET_ORDER:
                continue
            sel = base & (ch.tmax(t) < s)
            value = float(expr(n, s, t))
            yield {"s": s, "t": t}, sel, lambda d, value=value: np.full(d.shape, value)
    elif formula == "lem5":
        sel = base & (ch.mindeg >= 1)
        merris = merris_q_bound_batch(ch.a)
        yield {}, sel, lambda d, merris=merris, sel=sel: merris[sel]


def _verdicts(value, resid, bound, config: AuditConfig) -> np.ndarray:
    vt = config.violation_tol
    viol = value > bound + vt
    fits = value + resid <= bound + vt
    eq = ~viol & fits & (np.abs(value - bound) <= config.eq_rtol * np.maximum(1.0, bound))
    out = np.full(value.shape, 3, dtype=np.int8)
    out[fits] = 0
    out[eq] = 1
    out[viol] = 2
    return out


def _audit_stack(a: np.ndarray, keys: list[int], config: AuditConfig) -> AuditReport:
    report = AuditReport(graphs=len(keys), orders=(a.shape[1], a.shape[1]) if len(keys) else None)
    if not len(keys):
        return report
    ch = _Chunk(a, keys, config)
    n = ch.n
    if n > MAX_SUBSET_ORDER:
        skipped = sum(1 for f in config.formulas if f in SUBSET_FORMULAS for _, t in config.st_pairs if t > 2)
        report.unsupported += skipped * len(keys)
    for formula in config.formulas:
        counts = report.counts.setdefault(formula, {v: 0 for v in VERDICTS})
        value_all, resid_all = None, None
        for params, sel, bound_fn in _instances(ch, formula):
            idx = np.flatnonzero(sel)
            if not idx.size:
                continue
            if value_all is None:
                value_all, resid_all = ch.subject(SUBJECT[formula])
            bound = np.asarray(bound_fn(ch.delta[idx].astype(np.float64)), dtype=np.float64)
            value, resid = value_all[idx], resid_all[idx]
            verdict = _verdicts(value, resid, bound, config)
            tally = np.bincount(verdict, minlength=4)
            for i, v in enumerate(VERDICTS):
                counts[v] += int(tally[i])

            gap = bound - value
            gmin = gap.min()
            ties = idx[gap == gmin]
            mask = min(keys[i] for i in ties.tolist())
            full_params = {**params, "n": n}
            w = GapWitness(float(gmin), n, mask, tuple(sorted(full_params.items())))
            if formula not in report.gaps or w.key < report.gaps[formula].key:
                report.gaps[formula] = w

            keep = np.isin(verdict, [VERDICTS.index(v) for v in config.keep_verdicts])
            for j in np.flatnonzero(keep).tolist():
                gi = int(idx[j])
                g = Graph.from_mask(n, keys[gi])
                rp = dict(full_params)
                if formula in USES_DELTA:
                    rp["delta"] = int(ch.delta[gi])
                vname = VERDICTS[verdict[j]]
                report.records.append(
                    AuditRecord(
                        graph6=to_graph6(g),
                        formula=formula,
                        params=tuple(sorted(rp.items())),
                        bound=float(bound[j]),
                        value=float(value[j]),
                        residual=float(resid[j]),
                        verdict=vname,
                        srg=_srg_check(g, formula, rp) if vname == "equality" else None,
                    )
                )
    return report


# ---------------------------------------------------------------------------
# Drivers


def _audit_mask_range(args: tuple[int, int, int, AuditConfig, int]) -> AuditReport:
    n, start, stop, config, chunk_size = args
    report = AuditReport()
    for masks, a in adjacency_chunks(n, config.connected_only, chunk_size, start, stop):
        report = report.merge(_audit_stack(a, masks.tolist(), config))
    return report


def audit_graph(g: Graph, config: AuditConfig | None = None) -> list[AuditRecord]:
    """Every instance for one graph, whatever its verdict."""
    config = replace(config or AuditConfig(), keep_verdicts=VERDICTS)
    return _audit_stack(g.matrix()[None], [g.mask], config).sorted_records()


def audit_exhaustive(
    n: int,
    config: AuditConfig | None = None,
    jobs: int = 1,
    chunk_size: int = 1 << 16,
) -> AuditReport:
    """Audit every (connected, by default) labeled graph of order ``n``."""
    if not 1 <= n <= EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"exhaustive audits are capped at 1 <= n <= {EXHAUSTIVE_MAX_ORDER}, got {n}")
    config = config or AuditConfig()
    t0 = time.perf_counter()
    total = 1 << (n * (n - 1) // 2)
    if jobs <= 1:
        report = _audit_mask_range((n, 0, total, config, chunk_size))
    else:
        step = max(chunk_size, -(-total // jobs))
        tasks = [(n, lo, min(lo + step, total), config, chunk_size) for lo in range(0, total, step)]
        report = AuditReport()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_audit_mask_range, tasks):
                report = report.merge(part)
    report.wall_time = time.perf_counter() - t0
    return report


def audit_up_to(max_n: int, config: AuditConfig | None = None, jobs: int = 1) -> AuditReport:
    report = AuditReport()
    for n in range(1, max_n + 1):
        report = report.merge(audit_exhaustive(n, config, jobs))
    return report


def audit_graphs(graphs: Iterable[Graph], config: AuditConfig | None = None) -> AuditReport:
    """Audit an arbitrary collection of graphs, grouped by order."""
    config = config or AuditConfig()
    t0 = time.perf_counter()
    by_order: dict[int, list[Graph]] = {}
    for g in graphs:
        by_order.setdefault(g.n, []).append(g)
    report = AuditReport()
    for n in sorted(by_order):
        gs = by_order[n]
        a = np.stack([g.matrix() for g in gs])
        keys = [g.mask for g in gs]
        if config.connected_only:
            conn = batch_is_connected(a)
            a = a[conn]
            keys = [k for k, c in zip(keys, conn.tolist()) if c]
        report = report.merge(_audit_stack(a, keys, config))
    report.wall_time = time.perf_counter() - t0
    return report


def audit_corpus(lines: Iterable[str | bytes], config: AuditConfig | None = None) -> AuditReport:
    """Audit a newline-separated graph6 stream; malformed lines are skipped and listed."""
    graphs: list[Graph] = []
    skipped: list[tuple[int, str]] = []
    for lineno, item in read_graph6_lines(lines):
        if isinstance(item, Graph6Error):
            skipped.append((lineno, str(item)))
        else:
            graphs.append(item)
    report = audit_graphs(graphs, config)
    report.skipped = skipped
    return report


# ---------------------------------------------------------------------------
# Friendship graph maximality among C4-free graphs


@dataclass(frozen=True)
class FriendshipCheck:
    n: int
    confirmed: bool
    q_friendship: float
    best_q: float
    c4_free_graphs: int
    near_maximal: int
    non_friendship_near_maximal: int


def friendship_extremality(n: int, tol: float = 1e-8) -> FriendshipCheck:
    """Check that F_n uniquely maximises q among connected C4-free graphs of order n."""
    if not 5 <= n <= EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"friendship check supports 5 <= n <= {EXHAUSTIVE_MAX_ORDER}, got {n}")
    f = friendship(n)
    qf = q_radius(f).value
    labelings = {f.relabel(p).mask for p in permutations(range(n))}
    c4_free = near = foreign = 0
    best = -np.inf
    for masks, a in adjacency_chunks(n, connected_only=True):
        mac, mnc = pair_common_stats(a)
        keep = np.maximum(mac, mnc) <= 1
        if not keep.any():
            continue
        masks, a = masks[keep], a[keep]
        c4_free += len(masks)
        q = q_radius_batch(a).value
        best = max(best, float(q.max()))
        hits = masks[q >= qf - tol].tolist()
        near += len(hits)
        foreign += sum(1 for m in hits if m not in labelings)
    confirmed = near > 0 and foreign == 0
    return FriendshipCheck(n, confirmed, qf, best, c4_free, near, foreign)
