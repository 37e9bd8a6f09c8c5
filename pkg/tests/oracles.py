"""Independent reference implementations used only by the tests."""

import math
from itertools import combinations


def brute_kst(g, s, t):
    """Contains K_{s,t}: disjoint S (|S| = s), T (|T| = t) with every S-T pair adjacent."""
    verts = range(g.n)
    for S in combinations(verts, s):
        rest = [v for v in verts if v not in S]
        for T in combinations(rest, t):
            if all(g.has_edge(u, v) for u in S for v in T):
                return True
    return False


def brute_srg(g):
    n = g.n
    degs = {len(g.neighbors(u)) for u in range(n)}
    if len(degs) != 1:
        return None
    lam, mu = set(), set()
    for u, v in combinations(range(n), 2):
        c = len(set(g.neighbors(u)) & set(g.neighbors(v)))
        (lam if g.has_edge(u, v) else mu).add(c)
    if len(lam) != 1 or len(mu) != 1 or min(mu) < 1:
        return None
    return (n, degs.pop(), lam.pop(), mu.pop())


def thm1_ref(d, k, l, n):
    b = 3 * d + k - 2 * l + 1
    return (b + math.sqrt(b * b + 16 * l * (d + n - 1))) / 4
