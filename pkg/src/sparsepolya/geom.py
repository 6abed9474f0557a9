"""Exact lattice polytopes and their normal fans.

Facet and ray indices in the public API are 1-based, matching the Cox
variables x_1..x_r. Facets are ordered lexicographically by normal
vector unless a caller reorders them with :meth:`LatticePolytope.reorder`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from ._linalg import integer_kernel, inverse, matvec, nullspace, primitive, rank, rref, solve
from .polycore import SparsePoly, to_fraction

Point = tuple


# ---------------------------------------------------------------------------
# data types

@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple[Point, ...]

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "PointSet":
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            raise ValueError("empty point set")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points of mixed dimension")
        return cls(n, tuple(pts))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class LatticePolytope:
    """Vertices plus facet inequalities normal·x + offset >= 0.

    ``equations`` cut out the affine hull when ``dim`` is below the
    ambient dimension (normal·x + offset == 0 on the polytope). Vertices
    and offsets are rational after scaling, integral otherwise.
    """

    n: int
    vertices: tuple[Point, ...]
    normals: tuple[tuple[int, ...], ...]
    offsets: tuple
    equations: tuple[tuple[tuple[int, ...], object], ...]
    dim: int

    @property
    def r(self) -> int:
        return len(self.normals)

    @property
    def F(self) -> list[list[int]]:
        """n×r ray matrix; column i is the inner normal of facet i."""
        return [[nrm[k] for nrm in self.normals] for k in range(self.n)]

    @property
    def b(self) -> tuple:
        return self.offsets

    def is_full_dimensional(self) -> bool:
        return self.dim == self.n

    def slack(self, i: int, x: Sequence) -> Fraction:
        """F_i·x + b_i for the 1-based facet index i."""
        nrm = self.normals[i - 1]
        return sum(a * b for a, b in zip(nrm, x)) + self.offsets[i - 1]

    def on_affine_hull(self, x: Sequence) -> bool:
        return all(sum(a * b for a, b in zip(e, x)) + c == 0 for e, c in self.equations)

    def contains(self, x: Sequence) -> bool:
        return self.on_affine_hull(x) and all(self.slack(i, x) >= 0 for i in range(1, self.r + 1))

    @property
    def incidence(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.slack(i, v) == 0 for i in range(1, self.r + 1)) for v in self.vertices)

    def facet_vertices(self, i: int) -> frozenset[int]:
        """Indices (0-based) of vertices on facet i (1-based)."""
        return frozenset(k for k, v in enumerate(self.vertices) if self.slack(i, v) == 0)

    def vertex_facets(self, k: int) -> frozenset[int]:
        """1-based facets through vertex k (0-based)."""
        v = self.vertices[k]
        return frozenset(i for i in range(1, self.r + 1) if self.slack(i, v) == 0)

    def reorder(self, normals: Sequence[Sequence[int]]) -> "LatticePolytope":
        """Same polytope with facets listed in the given normal order."""
        want = [tuple(int(x) for x in nm) for nm in normals]
        if sorted(want) != sorted(self.normals):
            raise ValueError("normals do not match the facets of this polytope")
        idx = {nm: i for i, nm in enumerate(self.normals)}
        return LatticePolytope(self.n, self.vertices, tuple(want),
                               tuple(self.offsets[idx[nm]] for nm in want), self.equations, self.dim)

    def to_json(self) -> dict:
        return {
            "vertices": [[_num(x) for x in v] for v in self.vertices],
            "facets": [{"normal": list(nm), "offset": _num(b)} for nm, b in zip(self.normals, self.offsets)],
            "dim": self.dim,
        }


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Face:
    polytope: LatticePolytope
    active: frozenset[int]
    vertices: tuple[Point, ...]

    def contains(self, a: Sequence) -> bool:
        P = self.polytope
        if not P.on_affine_hull(a):
            return False
        for i in range(1, P.r + 1):
            s = P.slack(i, a)
            if (i in self.active and s != 0) or s < 0:
                return False
        return True

    @property
    def dim(self) -> int:
        if len(self.vertices) <= 1:
            return 0
        v0 = self.vertices[0]
        return rank([[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]], len(v0))


@dataclass(frozen=True)
class FanData:
    rays: tuple[tuple[int, ...], ...]
    maximal_cones: tuple[frozenset[int], ...]
    primitive_collections: tuple[frozenset[int], ...]
    irrelevant_generators: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "rays": [list(r) for r in self.rays],
            "maximal_cones": [sorted(c) for c in self.maximal_cones],
            "primitive_collections": [sorted(c) for c in self.primitive_collections],
            "irrelevant_generators": [list(g) for g in self.irrelevant_generators],
        }


@dataclass(frozen=True)
class SimplexProductDecomposition:
    """P = Δ_1 × ... × Δ_k with ray blocks C_j (1-based).

    ``coords`` lists the ambient coordinates each factor lives in when the
    product is coordinate aligned; then ``L`` and ``w`` map P onto a
    product of dilated standard simplices. Otherwise ``L`` and ``w`` are
    None and only ``v`` is available.
    """

    factors: tuple[tuple[tuple[Point, ...], frozenset[int]], ...]
    v: tuple[int, ...]
    L: tuple[tuple[int, ...], ...] | None = None
    w: tuple[int, ...] | None = None
    coords: tuple[tuple[int, ...], ...] | None = None

    def to_json(self) -> dict:
        return {
            "factors": [{"vertices": [list(p) for p in verts], "rays": sorted(c)} for verts, c in self.factors],
            "v": list(self.v),
            "L": None if self.L is None else [list(r) for r in self.L],
            "w": None if self.w is None else list(self.w),
        }


class NotSimplexProduct(ValueError):
    """Raised by :func:`detect_simplex_product`; ``condition`` names the failed test."""

    def __init__(self, condition: str, detail: str):
        super().__init__(f"{condition}: {detail}")
        self.condition = condition
        self.detail = detail


# ---------------------------------------------------------------------------
# Minkowski powers

def minkowski_power(A: Iterable[Sequence[int]], k: int) -> PointSet:
    """k·A = A + ... + A (k summands), built one summand at a time."""
    base = PointSet.of(A)
    if k < 1:
        raise ValueError("k must be at least 1")
    cur = set(base.points)
    for _ in range(k - 1):
        cur = {tuple(a + b for a, b in zip(p, q)) for p in cur for q in base.points}
    return PointSet(base.dim, tuple(sorted(cur)))


# ---------------------------------------------------------------------------
# convex hull

def _int_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        a, b, c = m
        return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    # Bareiss, exact on integers
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _cofactor_normal(vecs: list[tuple[int, ...]], d: int) -> tuple[int, ...] | None:
    """Integer vector orthogonal to d-1 vectors in Z^d (None if dependent)."""
    comps = []
    for i in range(d):
        minor = [[v[j] for j in range(d) if j != i] for v in vecs]
        comps.append((-1) ** i * _int_det(minor) if minor else 1)
    if not any(comps):
        return None
    g = reduce(gcd, (abs(c) for c in comps))
    return tuple(c // g for c in comps)


def _dot(u, p) -> int:
    return sum(a * b for a, b in zip(u, p))


def _affine_rank(pts) -> int:
    pts = list(pts)
    if len(pts) < 2:
        return 0
    p0 = pts[0]
    return rank([[a - b for a, b in zip(q, p0)] for q in pts[1:]], len(p0))


def _full_dim_hull(pts: list[Point], d: int) -> tuple[list[Point], list[tuple[tuple[int, ...], int]]]:
    """Vertices and facets (u, c) with u·y + c >= 0 of a full-dimensional set in Z^d.

    Beneath-beyond: start from a simplex and add points one at a time. A new
    facet through p comes from each ridge between a visible facet and an
    invisible one; ridges are recognised by the points tight on both.
    """
    if d == 1:
        lo = min(pts)
        hi = max(pts)
        return sorted([lo, hi]), [((1,), -lo[0]), ((-1,), hi[0])]
    pts = sorted(set(pts))
    simplex, rows = [pts[0]], []
    for p in pts[1:]:
        trial = rows + [[a - b for a, b in zip(p, pts[0])]]
        if rank(trial, d) > len(rows):
            rows, simplex = trial, simplex + [p]
            if len(simplex) == d + 1:
                break
    # facet: normal -> [offset, tight points]
    facets: dict[tuple[int, ...], list] = {}
    for i, apex in enumerate(simplex):
        rest = simplex[:i] + simplex[i + 1:]
        u = _cofactor_normal([tuple(a - b for a, b in zip(q, rest[0])) for q in rest[1:]], d)
        c = -_dot(u, rest[0])
        if _dot(u, apex) + c < 0:
            u, c = tuple(-x for x in u), -c
        facets[u] = [c, set(rest)]
    done = set(simplex)
    for p in pts:
        if p in done:
            continue
        done.add(p)
        vals = {u: _dot(u, p) + fc[0] for u, fc in facets.items()}
        visible = [u for u, v in vals.items() if v < 0]
        for u, v in vals.items():
            if v == 0:
                facets[u][1].add(p)
        if not visible:
            continue
        keep = [u for u, v in vals.items() if v >= 0]
        added: dict[tuple[int, ...], list] = {}
        for f in visible:
            cf, tf = facets[f]
            for g in keep:
                cg, tg = facets[g]
                if vals[g] == 0:
                    continue  # g itself stays a facet and gains p
                common = tf & tg
                if len(common) < d - 1 or _affine_rank(common) != d - 2:
                    continue
                lf, lg = vals[g], -vals[f]
                u = tuple(lf * x + lg * y for x, y in zip(f, g))
                c = lf * cf + lg * cg
                k = reduce(gcd, (abs(x) for x in u))
                u, c = tuple(x // k for x in u), c // k
                if u in added:
                    added[u][1] |= common | {p}
                else:
                    added[u] = [c, common | {p}]
        for f in visible:
            del facets[f]
        facets.update(added)
    verts = []
    for p in pts:
        tight = [u for u, fc in facets.items() if p in fc[1]]
        if len(tight) >= d and rank(tight, d) == d:
            verts.append(p)
    return verts, sorted((u, fc[0]) for u, fc in facets.items())


def affine_hull(points: Sequence[Point]) -> tuple[list[list[Fraction]], list[int], list[tuple[tuple[int, ...], int]]]:
    """(direction basis in RREF, pivot coordinates, integer equations)."""
    p0 = points[0]
    n = len(p0)
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    rows, piv = rref(diffs, n) if diffs else ([], [])
    eqs = []
    for vec in nullspace(rows, n) if rows else nullspace([], n):
        e = primitive(vec)
        if next(x for x in e if x != 0) < 0:
            e = tuple(-x for x in e)
        eqs.append((e, -sum(a * b for a, b in zip(e, p0))))
    return rows, piv, sorted(eqs)


def convex_hull(A: Iterable[Sequence[int]] | PointSet) -> LatticePolytope:
    pts = list(A.points) if isinstance(A, PointSet) else list(PointSet.of(A).points)
    n = len(pts[0])
    rows, piv, eqs = affine_hull(pts)
    d = len(piv)
    if d == 0:
        return LatticePolytope(n, (pts[0],), (), (), tuple(eqs), 0)
    proj = {p: tuple(p[k] for k in piv) for p in pts}
    back = {}
    for p, y in proj.items():
        back.setdefault(y, p)
    verts_y, facets_y = _full_dim_hull(sorted(back), d)
    verts = sorted(back[y] for y in verts_y)
    normals = []
    for u, _ in facets_y:
        U = [Fraction(0)] * n
        for k, pc in enumerate(piv):
            U[pc] = Fraction(u[k])
        if d < n:
            # orthogonal projection onto the direction space of the hull
            gram = [[sum(a * b for a, b in zip(r1, r2)) for r2 in rows] for r1 in rows]
            coef = solve(gram, [sum(a * b for a, b in zip(r, U)) for r in rows])
            U = [sum(c * r[j] for c, r in zip(coef, rows)) for j in range(n)]
        normals.append(primitive(U))
    facets = sorted((nm, -min(sum(a * b for a, b in zip(nm, v)) for v in verts)) for nm in normals)
    return LatticePolytope(n, tuple(verts), tuple(nm for nm, _ in facets), tuple(b for _, b in facets),
                           tuple(eqs), d)


def newton_polytope(f: SparsePoly) -> LatticePolytope:
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return convex_hull(f.support())


def hull_equals(P: LatticePolytope, A: Iterable[Sequence[int]]) -> bool:
    Q = A if isinstance(A, LatticePolytope) else convex_hull(A)
    if P.n != Q.n:
        raise ValueError("dimension mismatch")
    return set(P.vertices) == set(Q.vertices)


# ---------------------------------------------------------------------------
# faces

def face_of(P: LatticePolytope, w: Sequence) -> Face:
    """Face of P minimizing w, with its active facet set."""
    wf = [to_fraction(x) for x in w]
    vals = [sum(a * b for a, b in zip(wf, v)) for v in P.vertices]
    m = min(vals)
    vs = tuple(v for v, x in zip(P.vertices, vals) if x == m)
    active = frozenset(i for i in range(1, P.r + 1) if all(P.slack(i, v) == 0 for v in vs))
    return Face(P, active, vs)


def enumerate_faces(P: LatticePolytope) -> list[frozenset[int]]:
    """Active sets of all nonempty faces, closed under intersection."""
    return [f.active for f in faces(P)]


def faces(P: LatticePolytope) -> list[Face]:
    full = frozenset(range(len(P.vertices)))
    family = {full}
    frontier = {P.facet_vertices(i) for i in range(1, P.r + 1)}
    frontier.discard(frozenset())
    while frontier:
        family |= frontier
        new = set()
        for a in frontier:
            for b in family:
                c = a & b
                if c and c not in family:
                    new.add(c)
        frontier = new
    out = []
    for vs in family:
        verts = tuple(P.vertices[k] for k in sorted(vs))
        active = frozenset(i for i in range(1, P.r + 1) if vs <= P.facet_vertices(i))
        out.append(Face(P, active, verts))
    out.sort(key=lambda f: (len(f.active), sorted(f.active)))
    return out


def rays_form_cone(P: LatticePolytope, I: Iterable[int]) -> bool:
    idx = set(I)
    if not idx:
        return True
    if any(not 1 <= i <= P.r for i in idx):
        raise ValueError("ray index out of range")
    return any(idx <= P.vertex_facets(k) for k in range(len(P.vertices)))


def _require_full(P: LatticePolytope) -> None:
    if not P.is_full_dimensional():
        raise ValueError("polytope is not full-dimensional; project or dehomogenize first")


def primitive_collections(P: LatticePolytope) -> list[frozenset[int]]:
    _require_full(P)
    cones = [P.vertex_facets(k) for k in range(len(P.vertices))]

    def is_cone(s: frozenset[int]) -> bool:
        return any(s <= c for c in cones)

    out = []
    for size in range(2, P.r + 1):
        for sub in combinations(range(1, P.r + 1), size):
            s = frozenset(sub)
            if is_cone(s):
                continue
            if all(is_cone(s - {i}) for i in s):
                out.append(s)
    return sorted(out, key=sorted)


def irrelevant_generators(P: LatticePolytope) -> list[tuple[int, ...]]:
    _require_full(P)
    out = []
    for k in range(len(P.vertices)):
        cone = P.vertex_facets(k)
        g = tuple(0 if i in cone else 1 for i in range(1, P.r + 1))
        if g not in out:
            out.append(g)
    return out


def fan_data(P: LatticePolytope) -> FanData:
    _require_full(P)
    return FanData(
        rays=P.normals,
        maximal_cones=tuple(P.vertex_facets(k) for k in range(len(P.vertices))),
        primitive_collections=tuple(primitive_collections(P)),
        irrelevant_generators=tuple(irrelevant_generators(P)),
    )


# ---------------------------------------------------------------------------
# kernels and projections

def kernel_basis(F: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Integer basis of ker(F) for an n×r integer matrix."""
    r = len(F[0]) if F else 0
    return integer_kernel(F, r)


def lattice_projection(points: Iterable[Sequence[int]]):
    """Coordinates of points on the lattice of their affine hull.

    Returns (origin, basis, coords): each point equals origin plus the
    integer combination coords·basis, and basis is a Z-basis of the
    integer points of the hull's direction space.
    """
    pts = list(PointSet.of(points).points)
    _, _, eqs = affine_hull(pts)
    n = len(pts[0])
    basis = integer_kernel([e for e, _ in eqs], n) if eqs else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    origin = pts[0]
    cols = [list(col) for col in zip(*basis)] if basis else []
    coords = []
    for p in pts:
        if not basis:
            coords.append(())
            continue
        c = solve(cols, [a - b for a, b in zip(p, origin)])
        coords.append(tuple(int(x) for x in c))
    return origin, basis, coords


# ---------------------------------------------------------------------------
# products of simplices

def _maximal_minor_gcd(cols: list[tuple[int, ...]]) -> int:
    k = len(cols)
    n = len(cols[0])
    g = 0
    for rows in combinations(range(n), k):
        g = gcd(g, abs(_int_det([[c[r] for c in cols] for r in rows])))
    return g


def _is_standard_block(raysub: list[tuple[int, ...]]) -> bool:
    m = len(raysub[0])
    want = [tuple(int(i == j) for j in range(m)) for i in range(m)] + [tuple([-1] * m)]
    return sorted(raysub) == sorted(want)


def detect_simplex_product(P: LatticePolytope) -> SimplexProductDecomposition:
    """Recognize P as a product of full-dimensional simplices.

    Raises :class:`NotSimplexProduct` naming the first failed condition:
    ``partition``, ``rank``, ``direct-sum`` or ``vertex-count``.
    """
    _require_full(P)
    n, r = P.n, P.r
    cols = primitive_collections(P)
    seen: set[int] = set()
    for c in cols:
        if seen & c:
            raise NotSimplexProduct("partition", "primitive collections are not disjoint")
        seen |= c
    if seen != set(range(1, r + 1)):
        raise NotSimplexProduct("partition", "primitive collections do not cover all rays")
    for c in cols:
        rk = rank([P.normals[i - 1] for i in sorted(c)], n)
        if rk != len(c) - 1:
            raise NotSimplexProduct(
                "rank", f"rays of collection {sorted(c)} span dimension {rk}, expected {len(c) - 1}")
    total = rank(list(P.normals), n)
    if sum(len(c) - 1 for c in cols) != n or total != n:
        raise NotSimplexProduct("direct-sum", "ray subspaces do not form a direct sum equal to the whole space")
    expect = 1
    for c in cols:
        expect *= len(c)
    if len(P.vertices) != expect:
        raise NotSimplexProduct("vertex-count", f"{len(P.vertices)} vertices, expected {expect}")

    supports = [frozenset(k for i in c for k in range(n) if P.normals[i - 1][k] != 0) for c in cols]
    aligned = all(not (supports[a] & supports[b]) for a in range(len(cols)) for b in range(a + 1, len(cols)))
    through = P.vertex_facets(0)
    factors = []
    v = [0] * r
    blocks = []
    for c, sup in zip(cols, supports):
        fixed = through - c
        gverts = [u for k, u in enumerate(P.vertices) if fixed <= P.vertex_facets(k)]
        if len(gverts) != len(c):
            raise NotSimplexProduct("vertex-count", f"factor for rays {sorted(c)} has {len(gverts)} vertices")
        coords = tuple(sorted(sup))
        if aligned:
            fverts = tuple(sorted({tuple(u[k] for k in coords) for u in gverts}))
        else:
            fverts = tuple(sorted(gverts))
        factors.append((fverts, c))
        edges = [tuple(a - b for a, b in zip(u, gverts[0])) for u in gverts[1:]]
        vol = _maximal_minor_gcd(edges)
        for i in sorted(c):
            opp = [u for u in gverts if P.slack(i, u) != 0]
            if len(opp) != 1:
                raise NotSimplexProduct("vertex-count", f"facet {i} misses {len(opp)} factor vertices")
            dist = P.slack(i, opp[0])
            q = Fraction(vol) / dist
            if q.denominator != 1 or q <= 0:
                raise NotSimplexProduct("rank", f"facet {i} has non-integral lattice volume {q}")
            v[i - 1] = int(q)
        blocks.append((c, coords, fverts))

    L = w = None
    if aligned:
        Lm = [[0] * n for _ in range(n)]
        wv = [0] * n
        for c, coords, fverts in blocks:
            raysub = [tuple(P.normals[i - 1][k] for k in coords) for i in sorted(c)]
            if _is_standard_block(raysub):
                for i in c:
                    v[i - 1] = 1
                for k in coords:
                    Lm[k][k] = 1
                t = fverts[0]
                for a, k in enumerate(coords):
                    wv[k] = -t[a]
                continue
            Lj, wj = _block_map(fverts)
            for a, ka in enumerate(coords):
                wv[ka] = wj[a]
                for bb, kb in enumerate(coords):
                    Lm[ka][kb] = Lj[a][bb]
        L = tuple(tuple(row) for row in Lm)
        w = tuple(wv)
    dec = SimplexProductDecomposition(
        factors=tuple(factors), v=tuple(v), L=L, w=w,
        coords=tuple(coords for _, coords, _ in blocks) if aligned else None)
    _check_decomposition(P, dec)
    return dec


def _block_map(fverts: tuple[Point, ...]) -> tuple[list[list[int]], list[int]]:
    """L_j = det(M) M^{-1} and w_j = -L_j a_{n+1} for one simplex factor."""
    apex = min(fverts)
    rest = sorted((u for u in fverts if u != apex), reverse=True)
    m = len(apex)

    def build(order):
        return [[order[j][i] - apex[i] for j in range(m)] for i in range(m)]

    M = build(rest)
    dm = _int_det(M)
    if dm < 0 and m >= 2:
        rest[0], rest[1] = rest[1], rest[0]
        M = build(rest)
        dm = -dm
    inv = inverse(M)
    Lj = [[int(dm * x) for x in row] for row in inv]
    wj = [-x for x in matvec(Lj, apex)]
    return Lj, [int(x) for x in wj]


def _check_decomposition(P: LatticePolytope, dec: SimplexProductDecomposition) -> None:
    F = P.F
    if any(x <= 0 for x in dec.v):
        raise NotSimplexProduct("rank", "kernel vector is not positive")
    if any(sum(F[k][i] * dec.v[i] for i in range(P.r)) != 0 for k in range(P.n)):
        raise NotSimplexProduct("rank", "kernel vector is not in ker(F)")
    if dec.L is None:
        return
    Linv_t = [list(r) for r in zip(*inverse(dec.L))]
    for c, coords in zip((fc for _, fc in dec.factors), dec.coords):
        cols = []
        for i in sorted(c):
            col = matvec(Linv_t, [x * dec.v[i - 1] for x in P.normals[i - 1]])
            if any(col[k] != 0 for k in range(P.n) if k not in coords):
                raise NotSimplexProduct("direct-sum", "transformed rays leave their block")
            cols.append(tuple(col[k] for k in coords))
        if not _is_standard_block(cols):
            raise NotSimplexProduct("rank", f"block {sorted(c)} does not normalize to a dilated standard simplex")


def kernel_positive_vector(P: LatticePolytope, decomposition: SimplexProductDecomposition | None = None) -> tuple[int, ...]:
    """The positive kernel vector v attached to a simplex-product decomposition."""
    dec = decomposition or detect_simplex_product(P)
    _check_decomposition(P, dec)
    return dec.v


# ---------------------------------------------------------------------------
# rational polytopes

def scale_polytope(Q: LatticePolytope, lam) -> LatticePolytope:
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError("scale factor must be positive")
    return LatticePolytope(
        Q.n,
        tuple(tuple(lam * x for x in v) for v in Q.vertices),
        Q.normals,
        tuple(lam * b for b in Q.offsets),
        tuple((e, lam * c) for e, c in Q.equations),
        Q.dim,
    )


def translate_points(points: Iterable[Sequence], shift: Sequence) -> list[tuple]:
    s = [to_fraction(x) for x in shift]
    return [tuple(Fraction(x) + y for x, y in zip(p, s)) for p in points]


def relint_contains(P: Iterable[Sequence], Q: LatticePolytope) -> bool:
    """True iff every point of P lies in the relative interior of Q."""
    pts = [tuple(Fraction(x) for x in p) for p in P]
    if not pts:
        raise ValueError("empty point set")
    for p in pts:
        if not Q.on_affine_hull(p):
            return False
        if any(Q.slack(i, p) <= 0 for i in range(1, Q.r + 1)):
            return False
    return True


def barycenter(Q: LatticePolytope) -> tuple[Fraction, ...]:
    m = len(Q.vertices)
    return tuple(sum(Fraction(v[k]) for v in Q.vertices) / m for k in range(Q.n))
