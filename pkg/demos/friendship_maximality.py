"""
The friendship graph maximises q among C4-free graphs
=====================================================

Among connected graphs with no 4-cycle, the friendship graph (triangles
sharing a vertex, plus a pendant edge when n is even) has the largest
signless Laplacian radius.  We confirm uniqueness up to relabeling by
exhaustive enumeration for n = 5, 6, 7.
"""

from qspectral.audit import friendship_extremality

for n in (5, 6, 7):
    r = friendship_extremality(n)
    print(
        f"n={n}: q(F_n) = {r.q_friendship:.12f}, best over {r.c4_free_graphs} C4-free graphs = {r.best_q:.12f}, "
        f"{r.near_maximal} maximising labelings, {r.non_friendship_near_maximal} others -> "
        f"{'confirmed' if r.confirmed else 'NOT confirmed'}"
    )
