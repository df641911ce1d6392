"""Brute-force reference values for the C++ tests.

Reads point-set JSON documents (tri coordinates, rationals as strings) and
prints edge counts, matching size, alpha, strong matching size and minimum
blocking set size, each computed by exhaustive search with exact fractions.

usage: python3 oracle.py points1.json [points2.json ...]
"""

import itertools
import json
import sys
from fractions import Fraction

import networkx as nx


def load(path):
    with open(path) as f:
        doc = json.load(f)
    return [tuple(Fraction(c) for c in p) for p in doc["points"]]


def smallest(p, q, up):
    f = min if up else max
    return (up, tuple(f(a, b) for a, b in zip(p, q)))


def strictly_inside(tri, r):
    up, t = tri
    return all((x > ti) if up else (x < ti) for x, ti in zip(r, t))


def inside_closed(tri, r):
    up, t = tri
    return all((x >= ti) if up else (x <= ti) for x, ti in zip(r, t))


def graph(pts):
    edges = {}
    for i, j in itertools.combinations(range(len(pts)), 2):
        for up in (True, False):
            tri = smallest(pts[i], pts[j], up)
            if not any(inside_closed(tri, pts[k]) for k in range(len(pts)) if k not in (i, j)):
                edges.setdefault((i, j), []).append(tri)
    return edges


def meet(a, b, closed):
    (ua, ta), (ub, tb) = a, b
    lt = (lambda x, y: x <= y) if closed else (lambda x, y: x < y)
    if ua and ub:
        return lt(sum(max(x, y) for x, y in zip(ta, tb)), 0)
    if not ua and not ub:
        return lt(0, sum(min(x, y) for x, y in zip(ta, tb)))
    lo, hi = (ta, tb) if ua else (tb, ta)
    return all(lt(x, y) for x, y in zip(lo, hi)) and lt(sum(lo), 0) and lt(0, sum(hi))


def max_family(tris, closed):
    best = 0

    def grow(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(tris) - start <= best:
            return
        for k in range(start, len(tris)):
            if all(not meet(tris[k], c, closed) for c in chosen):
                grow(chosen + [tris[k]], k + 1)

    grow([], 0)
    return best


def cells(pts):
    """One point in every open cell of the arrangement of lines l_c = p_c."""
    a = sorted({p[0] for p in pts})
    b = sorted({p[1] for p in pts})
    s = sorted({-p[2] for p in pts})  # l2 = c  <=>  l0 + l1 = -c
    pad = 1 + max(abs(x) for p in pts for x in p)

    def gaps(v):
        edges = [v[0] - 2 * pad] + v + [v[-1] + 2 * pad]
        return list(zip(edges, edges[1:]))

    out = []
    for (a0, a1), (b0, b1) in itertools.product(gaps(a), gaps(b)):
        cuts = [a0 + b0] + [x for x in s if a0 + b0 < x < a1 + b1] + [a1 + b1]
        for lo, hi in zip(cuts, cuts[1:]):
            sigma = (lo + hi) / 2
            x0 = max(a0, sigma - b1)
            x1 = min(a1, sigma - b0)
            l0 = (x0 + x1) / 2
            l1 = sigma - l0
            out.append((l0, l1, -sigma))
    return out


def min_blocking(pts, tris):
    if not tris:
        return 0
    patterns = set()
    for c in cells(pts):
        pat = frozenset(k for k, t in enumerate(tris) if strictly_inside(t, c))
        if pat:
            patterns.add(pat)
    patterns = [p for p in patterns if not any(p < q for q in patterns)]
    best = len(tris)

    def solve(uncovered, used):
        nonlocal best
        if not uncovered:
            best = min(best, used)
            return
        if used + 1 >= best:
            return
        k = min(uncovered, key=lambda t: sum(1 for p in patterns if t in p))
        for p in patterns:
            if k in p:
                solve(uncovered - p, used + 1)

    solve(frozenset(range(len(tris))), 0)
    return best


def report(pts):
    edges = graph(pts)
    g = nx.Graph()
    g.add_nodes_from(range(len(pts)))
    g.add_edges_from(edges)
    tris = [t for ts in edges.values() for t in ts]
    return {
        "n": len(pts),
        "edges": len(edges),
        "up": sum(1 for ts in edges.values() if any(t[0] for t in ts)),
        "down": sum(1 for ts in edges.values() if any(not t[0] for t in ts)),
        "mu": len(nx.max_weight_matching(g, maxcardinality=True)),
        "alpha": max_family(tris, closed=False),
        "strong": max_family(tris, closed=True),
        "beta": min_blocking(pts, tris),
    }


if __name__ == "__main__":
    for path in sys.argv[1:]:
        print(path, json.dumps(report(load(path))))
