"""
How close can a search get to the bound?
========================================

Hill climbing over connected graphs on 10 vertices with no B_4 (k = 3) and
no K_{2,5} (l = 4).  T(5) reaches q = 12, which equals the bound.  With
this seed the search finds a graph that also meets it; smaller budgets stop
at local optima and the reported gaps show how much room they leave.
"""

from qspectral.graph import triangular
from qspectral.graph6 import to_graph6
from qspectral.search import SearchConfig, extremal_search

cfg = SearchConfig(n=10, book_cap=3, pair_cap=4, budget=3000, restarts=4, seed=0)
res = extremal_search(cfg)
print(f"best q = {res.q:.12f} after {res.evaluations} evaluations ({res.graph6})")
for name, gap in sorted(res.gaps.items()):
    print(f"  gap to {name}: {gap:.9f}")
print("T(5) is feasible:", cfg.feasible(triangular(5)), to_graph6(triangular(5)))
