"""
Exhaustive audit of every bound on small graphs
===============================================

Every connected labeled graph up to order 6 is run against every formula at
every admissible parameter choice.  Violations are certified: the Rayleigh
quotient never exceeds the true radius, so value > bound is a real failure.
"""

import time

from qspectral.audit import MUST_HOLD, AuditConfig, audit_up_to

t0 = time.perf_counter()
report = audit_up_to(6, AuditConfig(keep_verdicts=("equality",)))
print(f"{report.graphs} graphs, {report.total()} instances in {time.perf_counter() - t0:.1f}s\n")

print(f"{'formula':18s} {'holds':>8s} {'equal':>7s} {'viol':>8s} {'min gap':>14s}")
for f, per in sorted(report.counts.items()):
    gap = report.gaps[f].gap if f in report.gaps else float("nan")
    flag = "" if f in MUST_HOLD else "  (n - l reading)"
    print(f"{f:18s} {per['holds']:8d} {per['equality']:7d} {per['violation']:8d} {gap:14.9f}{flag}")

# equality on the q bound only happens on complete graphs at this size
for r in report.equalities("thm1"):
    print(r.graph6, r.params_text(), r.srg)
