"""Command-line front end: ``qspectral {spectra,gen,check,bound,audit,search}``.

Exit status is 0 on success, 1 on usage or input errors and 2 when an audit
finds a violation of a bound that must hold (violations of the printed
``lem1_printed`` form are findings and keep status 0).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

from . import bounds as B
from .audit import ALL_FORMULAS, AuditConfig, audit_corpus, audit_exhaustive, audit_graphs, audit_up_to
from .forbidden import UnsupportedSize, is_book_free, is_kst_free, profile, srg_params
from .graph import FAMILY_NAMES, Graph, make_family
from .graph6 import Graph6Error, from_graph6, read_graph6_lines, to_graph6
from .search import NoFeasibleStart, SearchConfig, extremal_search
from .spectra import DEFAULT_TOL, adj_radius, q_radius

# family -> CLI flags holding its parameters, in constructor order
FAMILY_FLAGS = {
    "complete": ("n",),
    "complete_bipartite": ("s", "t"),
    "path": ("n",),
    "cycle": ("n",),
    "book": ("k",),
    "friendship": ("n",),
    "petersen": (),
    "rook": ("m",),
    "triangular": ("m",),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(f"{self.prog}: error: {message}")


def fmt(x: float) -> str:
    return f"{x:.12f}"


def fmt_small(x: float) -> str:
    return f"{x:.9e}"


def _add_input(p: argparse.ArgumentParser, family_params: bool = True) -> None:
    g = p.add_argument_group("input (exactly one)")
    g.add_argument("--graph6", help="inline graph6 string")
    g.add_argument("--file", type=Path, help="file of newline-separated graph6")
    g.add_argument("--family", choices=FAMILY_NAMES, help="built-in graph family")
    if family_params:
        g.add_argument("--m", type=int, help="side length for rook/triangular families")


def _load_graphs(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    sources = [s for s in ("graph6", "file", "family") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --graph6, --file, --family")
    if args.graph6 is not None:
        try:
            return [("arg", from_graph6(args.graph6))]
        except Graph6Error as exc:
            raise UsageError(f"malformed graph6: {exc}") from exc
    if args.file is not None:
        try:
            lines = args.file.read_text(encoding="ascii").splitlines()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
        out = []
        for lineno, item in read_graph6_lines(lines):
            if isinstance(item, Graph6Error):
                raise UsageError(f"{args.file}:{lineno}: malformed graph6: {item}")
            out.append((f"line {lineno}", item))
        return out
    return [(args.family, _family_graph(args))]


def _family_graph(args: argparse.Namespace) -> Graph:
    flags = FAMILY_FLAGS[args.family]
    params = []
    for f in flags:
        v = getattr(args, f, None)
        if v is None:
            raise UsageError(f"family {args.family} needs --{f}")
        params.append(v)
    try:
        return make_family(args.family, *params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_spectra(args: argparse.Namespace) -> int:
    rows = []
    for label, g in _load_graphs(args):
        q, rho = q_radius(g, args.tol), adj_radius(g, args.tol)
        rows.append(
            {
                "source": label,
                "graph6": to_graph6(g),
                "n": g.n,
                "edges": g.edge_count,
                "q": q.value,
                "q_residual": q.residual,
                "q_iterations": q.iterations,
                "q_converged": q.converged,
                "rho": rho.value,
                "rho_residual": rho.residual,
                "rho_iterations": rho.iterations,
                "rho_converged": rho.converged,
            }
        )
    if args.format == "json":
        _emit(json.dumps(rows, indent=2, sort_keys=True), args.out)
    else:
        lines = [
            f"{r['graph6']}\tq = {fmt(r['q'])} (residual {fmt_small(r['q_residual'])})"
            f"\trho = {fmt(r['rho'])} (residual {fmt_small(r['rho_residual'])})"
            for r in rows
        ]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    args.graph6 = args.file = None
    _emit(to_graph6(_family_graph(args)), args.out)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    ts = [args.t] if args.t is not None and args.s is not None else []
    rows = []
    for label, g in _load_graphs(args):
        try:
            prof = profile(g, [t for t in ts if t <= g.n])
        except UnsupportedSize as exc:
            raise UsageError(str(exc)) from exc
        srg = srg_params(g)
        row: dict = {
            "source": label,
            "graph6": to_graph6(g),
            "n": g.n,
            "delta": g.max_degree,
            "min_degree": g.min_degree,
            "max_adjacent_common": prof.max_adjacent_common,
            "max_nonadjacent_common": prof.max_nonadjacent_common,
            "tsubset_max": {str(t): v for t, v in prof.tsubset_max.items()},
            "srg": asdict(srg) if srg else None,
        }
        verdicts: dict[str, bool] = {}
        if args.k is not None:
            verdicts[f"B_{args.k + 1}-free"] = is_book_free(g, args.k + 1)
            verdicts["cor1_applies"] = B.cor1_applies(g, args.k)
        if args.l is not None:
            verdicts[f"K_2,{args.l + 1}-free"] = prof.max_pair_common <= args.l
            verdicts["cor2_applies"] = B.cor2_applies(g, args.l)
        if args.k is not None and args.l is not None:
            verdicts["thm1_applies"] = B.thm1_applies(g, args.k, args.l)
            verdicts["lem1_applies"] = B.lem1_applies(g, args.k, args.l)
            verdicts["lem2_applies"] = B.lem2_applies(g, args.k, args.l)
        if args.s is not None and args.t is not None:
            try:
                verdicts[f"K_{args.s},{args.t}-free"] = is_kst_free(g, args.s, args.t)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            verdicts["thm2_applies"] = B.thm2_applies(g, args.s, args.t)
            verdicts["lem3_applies"] = B.lem3_applies(g, args.s, args.t)
        row["verdicts"] = verdicts
        rows.append(row)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2, sort_keys=True), args.out)
    else:
        lines = []
        for r in rows:
            lines.append(
                f"{r['graph6']}: n={r['n']} delta={r['delta']} "
                f"adjacent_common={r['max_adjacent_common']} nonadjacent_common={r['max_nonadjacent_common']}"
            )
            for t, v in r["tsubset_max"].items():
                lines.append(f"  max common neighbours of {t} vertices: {v}")
            if r["srg"]:
                s = r["srg"]
                lines.append(f"  strongly regular: ({s['n']},{s['k_reg']},{s['a']},{s['c']})")
            for name, ok in r["verdicts"].items():
                lines.append(f"  {name}: {'yes' if ok else 'no'}")
        _emit("\n".join(lines), args.out)
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    spec = B.FORMULAS[args.formula]
    params = {}
    for p in spec.params:
        v = getattr(args, p)
        if v is None:
            raise UsageError(f"formula {args.formula} needs --{p.replace('_', '-')}")
        params[p] = v
    res = B.evaluate(args.formula, **params)
    if not res.hypothesis_ok:
        raise UsageError(f"hypothesis violated for {args.formula}: {res.reason}")
    if args.format == "json":
        _emit(json.dumps({"formula": res.formula, "params": res.params, "value": res.value}, sort_keys=True), args.out)
    else:
        _emit(fmt(res.value), args.out)
    return 0


def _parse_st(text: str) -> tuple[tuple[int, int], ...]:
    try:
        pairs = tuple(tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk.strip())
    except ValueError as exc:
        raise UsageError(f"bad --st value {text!r}; expected e.g. '3,3;4,3'") from exc
    if any(len(p) != 2 for p in pairs):
        raise UsageError(f"bad --st value {text!r}; expected e.g. '3,3;4,3'")
    return pairs  # type: ignore[return-value]


def cmd_audit(args: argparse.Namespace) -> int:
    formulas = tuple(f.strip() for f in args.formulas.split(",")) if args.formulas else ALL_FORMULAS
    kwargs = dict(formulas=formulas, tol=args.tol, violation_tol=args.violation_tol, connected_only=not args.all_graphs)
    if args.st:
        kwargs["st_pairs"] = _parse_st(args.st)
    try:
        config = AuditConfig(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    sources = [s for s in ("n", "max_n", "graph6", "file", "family") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --n, --max-n, --graph6, --file, --family")
    try:
        if args.n is not None:
            report = audit_exhaustive(args.n, config, jobs=args.jobs)
        elif args.max_n is not None:
            if not 1 <= args.max_n <= 7:
                raise UsageError("--max-n must be in 1..7")
            report = audit_up_to(args.max_n, config, jobs=args.jobs)
        elif args.file is not None:
            try:
                lines = args.file.read_bytes().splitlines()
            except OSError as exc:
                raise UsageError(f"cannot read {args.file}: {exc}") from exc
            report = audit_corpus(lines, config)
        else:
            report = audit_graphs([g for _, g in _load_graphs(args)], config)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    if args.format == "json":
        _emit(report.to_json(include_timing=not args.no_timing), args.out)
    elif args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        lines = [f"graphs audited: {report.graphs}"]
        for f, per in sorted(report.counts.items()):
            lines.append(f"{f}: " + " ".join(f"{v}={c}" for v, c in per.items()))
        for ln, msg in report.skipped:
            lines.append(f"skipped line {ln}: {msg}")
        for r in report.sorted_records():
            if r.verdict == "violation":
                lines.append(f"VIOLATION {r.formula} {r.params_text()} {r.graph6}: {fmt(r.value)} > {fmt(r.bound)}")
        _emit("\n".join(lines), args.out)
    for ln, msg in report.skipped:
        print(f"warning: skipped malformed line {ln}: {msg}", file=sys.stderr)
    return 2 if report.must_hold_violations() else 0


def cmd_search(args: argparse.Namespace) -> int:
    kst = (args.s, args.t) if args.s is not None and args.t is not None else None
    if (args.s is None) != (args.t is None):
        raise UsageError("--s and --t go together")
    try:
        cfg = SearchConfig(
            n=args.n, book_cap=args.k, pair_cap=args.l, kst=kst,
            budget=args.budget, restarts=args.restarts, seed=args.seed,
        )
        res = extremal_search(cfg)
    except NoFeasibleStart as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = asdict(res)
    payload["bound_violations"] = list(res.bound_violations)
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        lines = [f"best graph6: {res.graph6}", f"q = {fmt(res.q)}", f"evaluations: {res.evaluations}"]
        lines += [f"gap to {f}: {fmt(gap)}" for f, gap in sorted(res.gaps.items())]
        _emit("\n".join(lines), args.out)
    return 2 if set(res.bound_violations) & {"thm1", "thm2"} else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qspectral", description="Spectral extremal bounds for book-free and K_{s,t}-free graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp: argparse.ArgumentParser, formats: tuple[str, ...] = ("plain", "json")) -> None:
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", type=Path, help="write output here instead of stdout")

    sp = sub.add_parser("spectra", help="q(G) and rho(G) with residuals")
    _add_input(sp)
    for f in ("n", "s", "t", "k"):
        sp.add_argument(f"--{f}", type=int)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common(sp)
    sp.set_defaults(func=cmd_spectra)

    sp = sub.add_parser("gen", help="graph6 of a named family")
    sp.add_argument("--family", choices=FAMILY_NAMES, required=True)
    for f in ("n", "s", "t", "k", "m"):
        sp.add_argument(f"--{f}", type=int)
    sp.add_argument("--out", type=Path)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("check", help="forbidden-subgraph profile and freeness verdicts")
    _add_input(sp)
    for f in ("n", "s", "t", "k", "l"):
        sp.add_argument(f"--{f}", type=int)
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("bound", help="evaluate a bound for explicit parameters")
    sp.add_argument("--formula", choices=sorted(B.FORMULAS), required=True)
    for f in ("delta", "k", "l", "n", "s", "t", "size-a", "size-b"):
        sp.add_argument(f"--{f}", type=int)
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("audit", help="audit bounds exhaustively or over a graph6 corpus")
    sp.add_argument("--n", type=int, help="exhaustive audit of one order (<= 7)")
    sp.add_argument("--max-n", type=int, help="exhaustive audit of orders 1..MAX_N")
    _add_input(sp)
    for f in ("s", "t", "k"):
        sp.add_argument(f"--{f}", type=int, help=argparse.SUPPRESS)
    sp.add_argument("--formulas", help=f"comma-separated subset of {','.join(ALL_FORMULAS)}")
    sp.add_argument("--st", help="(s,t) pairs, e.g. '2,2;3,2;3,3;4,3'")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--violation-tol", type=float, default=1e-8)
    sp.add_argument("--all-graphs", action="store_true", help="include disconnected graphs")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-timing", action="store_true", help="omit wall time from JSON")
    common(sp, ("plain", "json", "csv"))
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("search", help="hill-climb q(G) under forbidden-subgraph caps")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, help="book cap: no B_{k+1}")
    sp.add_argument("--l", type=int, help="pair cap: no K_{2,l+1}")
    sp.add_argument("--s", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--budget", type=int, default=2000)
    sp.add_argument("--restarts", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_search)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
