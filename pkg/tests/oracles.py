"""Slow, independent reference computations used by the property tests."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def _normal(vecs, d):
    if d == 1:
        return (1,)
    if d == 2:
        (x, y), = vecs
        return (-y, x)
    (a1, a2, a3), (b1, b2, b3) = vecs
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def _prim(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return tuple(x // g for x in v)


def brute_facets(points):
    """Every (inner primitive normal, offset) with <a,n> + b >= 0, found by trying all d-subsets."""
    pts = sorted(set(map(tuple, points)))
    d = len(pts[0])
    out = set()
    for sub in combinations(pts, d):
        p0 = sub[0]
        if d == 1:
            cands = [(1,), (-1,)]
        else:
            nrm = _normal([tuple(a - b for a, b in zip(p, p0)) for p in sub[1:]], d)
            if not any(nrm):
                continue
            nrm = _prim(nrm)
            cands = [nrm, tuple(-x for x in nrm)]
        for n in cands:
            b = -sum(x * y for x, y in zip(n, p0))
            vals = [sum(x * y for x, y in zip(n, p)) + b for p in pts]
            if min(vals) >= 0 and (d > 1 or min(vals) == 0):
                out.add((n, b))
    return out


def brute_vertices(points, facets):
    d = len(points[0])
    verts = set()
    for p in set(map(tuple, points)):
        through = [n for n, b in facets if sum(x * y for x, y in zip(n, p)) + b == 0]
        if rank(through, d) == d:
            verts.add(p)
    return verts


def rank(rows, ncols):
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def kirchhoff(vertices, edges):
    """Number of spanning trees: any cofactor of the Laplacian."""
    L = [[0] * vertices for _ in range(vertices)]
    for u, v in edges:
        if u == v:
            continue
        L[u - 1][u - 1] += 1
        L[v - 1][v - 1] += 1
        L[u - 1][v - 1] -= 1
        L[v - 1][u - 1] -= 1
    if vertices == 1:
        return 1
    return int(det([row[1:] for row in L[1:]]))


def two_forests_from_trees(vertices, edges, trees):
    """Edge sets obtained by deleting one edge from a spanning tree, deduplicated."""
    out = set()
    for T in trees:
        for e in T:
            out.add(tuple(sorted(set(T) - {e})))
    return out
