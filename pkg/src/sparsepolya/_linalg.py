"""Small exact linear algebra over Fraction and int.

Kept local because the hull and fan code call these in tight loops on
tiny matrices, where a general CAS is far slower.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Vec = tuple


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                fac = m[i][c]
                m[i] = [a - fac * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows·x = 0} over Q."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for r, pc in zip(red, piv):
            x[pc] = -r[fc]
        basis.append(x)
    return basis


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, same direction."""
    fr = [Fraction(x) for x in vec]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def det(mat: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in mat]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                fac = m[i][c] / m[c][c]
                m[i] = [a - fac * b for a, b in zip(m[i], m[c])]
    return out


def inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(mat)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [r[n:] for r in red]


def solve(mat: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of mat·x = rhs, or None when inconsistent."""
    ncols = len(mat[0]) if mat else 0
    aug = [list(r) + [b] for r, b in zip(mat, rhs)]
    red, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in zip(red, piv):
        x[pc] = r[ncols]
    return x


def matvec(mat: Sequence[Sequence], vec: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def transpose(mat: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*mat)]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Z-basis of {x in Z^n : rows·x = 0}.

    Unimodular column reduction: track U with rows·U in column echelon
    form; the columns of U past the rank span the integer kernel.
    """
    a = [list(map(int, r)) for r in rows]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(dst: int, src: int, q: int) -> None:
        # column dst -= q * column src
        for r in a:
            r[dst] -= q * r[src]
        for r in u:
            r[dst] -= q * r[src]

    def swap(i: int, j: int) -> None:
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    col = 0
    for row in range(len(a)):
        if col >= ncols:
            break
        while True:
            nz = [j for j in range(col, ncols) if a[row][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(a[row][j]))
            swap(col, piv)
            done = True
            for j in range(col + 1, ncols):
                if a[row][j] != 0:
                    colop(j, col, a[row][j] // a[row][col])
                    if a[row][j] != 0:
                        done = False
            if done:
                break
        if any(a[row][j] != 0 for j in range(col, ncols)):
            col += 1
    basis = [tuple(u[i][j] for i in range(ncols)) for j in range(col, ncols)]
    # normalize to a reproducible basis: HNF-like reduction of the row form
    return _reduce_basis(basis)


def _reduce_basis(basis: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Integer row-echelon form of a lattice basis (same lattice)."""
    b = [list(v) for v in basis]
    if not b:
        return []
    n = len(b[0])
    out: list[list[int]] = []
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(b)) if b[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(b[i][c]))
            b[r], b[p] = b[p], b[r]
            others = [i for i in range(r + 1, len(b)) if b[i][c] != 0]
            if not others:
                break
            for i in others:
                q = b[i][c] // b[r][c]
                b[i] = [x - q * y for x, y in zip(b[i], b[r])]
        if r < len(b) and b[r][c] != 0:
            if b[r][c] < 0:
                b[r] = [-x for x in b[r]]
            for i in range(r):
                q = b[i][c] // b[r][c]
                b[i] = [x - q * y for x, y in zip(b[i], b[r])]
            r += 1
    out = b[:r]
    return [tuple(v) for v in out]


def lcm_denominators(values) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), (Fraction(v).denominator for v in values), 1)
