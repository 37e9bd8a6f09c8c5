"""
Strongly regular graphs meeting the signless Laplacian bound
=============================================================

For a connected graph with no edge in k+1 triangles and no vertex pair with
l+1 common neighbours, q(G) is bounded by a closed form in (Delta, k, l, n).
Strongly regular graphs whose parameters line up with (Delta, k, l) hit the
bound exactly.  T(5) and the 4x4 rook's graph do; the Petersen graph is
strongly regular too, but its degree is too small for the bound to be tight.
"""

from qspectral import bounds as B
from qspectral.forbidden import profile, srg_params
from qspectral.graph import petersen, rook, triangular
from qspectral.spectra import q_radius

for name, g in [("T(5)", triangular(5)), ("rook 4x4", rook(4)), ("Petersen", petersen())]:
    p = profile(g)
    srg = srg_params(g)
    k = max(2, p.max_adjacent_common)
    l = max(k, p.max_nonadjacent_common)
    q = q_radius(g)
    print(f"{name}: SRG{(srg.n, srg.k_reg, srg.a, srg.c)}  q = {q.value:.12f}  (residual {q.residual:.1e})")
    if B.thm1_applies(g, k, l):
        print(f"    bound(Delta={g.max_degree}, k={k}, l={l}, n={g.n}) = {B.thm1_bound(g.max_degree, k, l, g.n):.12f}")
