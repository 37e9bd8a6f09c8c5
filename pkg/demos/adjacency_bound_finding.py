"""
Two readings of an adjacency radius bound
=========================================

The bound rho <= (k - l + sqrt((k - l)^2 + 4 Delta + 4 l (n - ?))) / 2 can be
read with n - l or with n - 1 under the root.  The 4x4 rook's graph
(6-regular, every pair shares at most two neighbours) settles it: rho = 6
exceeds the n - l reading and meets the n - 1 reading with equality.
"""

from qspectral import bounds as B
from qspectral.audit import AuditConfig, audit_graph
from qspectral.graph import rook
from qspectral.spectra import adj_radius

g = rook(4)
rho = adj_radius(g).value
print(f"rho(rook 4x4) = {rho:.12f}")
print(f"n - l reading: {B.lem1_bound_printed(6, 2, 2, 16):.12f}")
print(f"n - 1 reading: {B.lem1_bound_corrected(6, 2, 2, 16):.12f}")

# the audit flags the n - l reading at every admissible (k, l)
for r in audit_graph(g, AuditConfig(formulas=("lem1_printed", "lem1_corrected"))):
    if r.verdict != "holds":
        print(f"  {r.formula:15s} {r.params_text():28s} {r.verdict}")
