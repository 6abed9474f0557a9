"""Integer-scaled product states for multiplier-power searches.

A search multiplies one polynomial by the same few multipliers over and
over and only asks sign questions of the result. Coefficients are scaled
to integers once, and exponents are projected onto coordinates that
determine them (a product of homogeneous inputs never needs all of
them). The state is a dense numpy array of Python ints while its box is
small enough and a dict otherwise. Both paths are exact and give the
same answers; tests compare them against plain ``mul``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from ._linalg import lcm_denominators, rref
from .polycore import Exponent, SparsePoly, grevlex_key

DENSE_CELL_LIMIT = 40_000_000


class Frame:
    """Affine coordinates on the lattice spanned by the inputs' supports."""

    def __init__(self, n: int, point_sets: Sequence[Sequence[Exponent]]):
        self.n = n
        diffs = []
        for pts in point_sets:
            pts = list(pts)
            if not pts:
                continue
            p0 = pts[0]
            diffs.extend([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]])
        rows, piv = rref(diffs, n) if diffs else ([], [])
        self.rows = rows
        self.pivots = piv
        self.d = len(piv)
        # integer rows are the common case; keep them as ints for speed
        self._int_rows = all(x.denominator == 1 for r in rows for x in r)

    def project(self, e: Sequence[int]) -> tuple[int, ...]:
        return tuple(e[p] for p in self.pivots)

    def lift(self, p: Sequence[int], base: Sequence[int]) -> Exponent:
        out = list(base)
        for k, (row, pc) in enumerate(zip(self.rows, self.pivots)):
            delta = p[k] - base[pc]
            if delta:
                for j in range(self.n):
                    if row[j]:
                        out[j] += delta * row[j]
        return tuple(int(x) for x in out)


class _Factor:
    """One multiplier prepared for repeated use."""

    def __init__(self, g: SparsePoly, frame: Frame):
        if g.is_zero():
            raise ValueError("zero multiplier")
        self.den = lcm_denominators(g.terms.values())
        items = sorted(g.terms.items())
        self.base = items[0][0]
        proj = [frame.project(e) for e, _ in items]
        self.lo = tuple(min(p[k] for p in proj) for k in range(frame.d))
        hi = tuple(max(p[k] for p in proj) for k in range(frame.d))
        self.ext = tuple(h - l for h, l in zip(hi, self.lo))
        self.terms = [
            (tuple(p[k] - self.lo[k] for k in range(frame.d)), int(c * self.den))
            for p, (_, c) in zip(proj, items)
        ]


class ProductState:
    """The product Π g_j^{N_j} · f, with an optional required-support mask.

    The mask tracks (k+N)·A for strict-support searches: it starts as a
    given point set and is Minkowski-added with the support of the
    multiplier at every step.
    """

    def __init__(self, f: SparsePoly, multipliers: Sequence[SparsePoly],
                 required: Sequence[Exponent] | None = None, cell_limit: int = DENSE_CELL_LIMIT):
        if f.is_zero():
            raise ValueError("zero polynomial")
        n = f.n
        for g in multipliers:
            if g.n != n:
                raise ValueError("dimension mismatch")
        sets = [list(f.terms)] + [list(g.terms) for g in multipliers]
        if required is not None:
            sets.append([tuple(r) for r in required])
            # anchor the required set to f's affine class
            sets.append([next(iter(f.terms)), tuple(required[0])])
        self.frame = Frame(n, sets)
        self.factors = [_Factor(g, self.frame) for g in multipliers]
        self.exponents = [0] * len(multipliers)
        self.cell_limit = cell_limit
        self.n = n
        self.den = lcm_denominators(f.terms.values())
        self.base = list(sorted(f.terms)[0])
        d = self.frame.d
        fproj = {self.frame.project(e): int(c * self.den) for e, c in f.terms.items()}
        pts = list(fproj)
        req = None
        if required is not None:
            req = {self.frame.project(r) for r in required}
            pts = pts + list(req)
        self.lo = tuple(min(p[k] for p in pts) for k in range(d))
        hi = tuple(max(p[k] for p in pts) for k in range(d))
        shape = tuple(h - l + 1 for h, l in zip(hi, self.lo))
        self.dense = d > 0 and _cells(shape) <= cell_limit
        if self.dense:
            self.arr = np.zeros(shape, dtype=object)
            for p, c in fproj.items():
                self.arr[tuple(p[k] - self.lo[k] for k in range(d))] = c
            if req is not None:
                self.mask = np.zeros(shape, dtype=bool)
                for p in req:
                    self.mask[tuple(p[k] - self.lo[k] for k in range(d))] = True
            else:
                self.mask = None
        else:
            self.data = dict(fproj)
            self.req = req

    # multiplication ---------------------------------------------------
    def times(self, j: int) -> None:
        fac = self.factors[j]
        self.exponents[j] += 1
        self.den *= fac.den
        self.base = [a + b for a, b in zip(self.base, fac.base)]
        if self.dense:
            shape = tuple(s + e for s, e in zip(self.arr.shape, fac.ext))
            if _cells(shape) > self.cell_limit:
                self._to_sparse()
        if self.dense:
            self._times_dense(fac)
        else:
            self._times_sparse(fac)

    def _times_dense(self, fac: _Factor) -> None:
        old = self.arr
        shape = tuple(s + e for s, e in zip(old.shape, fac.ext))
        new = np.zeros(shape, dtype=object)
        for off, c in fac.terms:
            sl = tuple(slice(o, o + s) for o, s in zip(off, old.shape))
            if c == 1:
                new[sl] += old
            else:
                new[sl] += old * c
        self.arr = new
        if self.mask is not None:
            m = np.zeros(shape, dtype=bool)
            for off, _ in fac.terms:
                sl = tuple(slice(o, o + s) for o, s in zip(off, self.mask.shape))
                m[sl] |= self.mask
            self.mask = m
        self.lo = tuple(a + b for a, b in zip(self.lo, fac.lo))

    def _times_sparse(self, fac: _Factor) -> None:
        d = self.frame.d
        acc: dict = {}
        pts = [tuple(fac.lo[k] + off[k] for k in range(d)) for off, _ in fac.terms]
        coefs = [c for _, c in fac.terms]
        for p, v in self.data.items():
            for q, c in zip(pts, coefs):
                key = tuple(p[k] + q[k] for k in range(d))
                acc[key] = acc.get(key, 0) + v * c
        self.data = {k: v for k, v in acc.items() if v}
        if self.req is not None:
            self.req = {tuple(p[k] + q[k] for k in range(d)) for p in self.req for q in pts}

    def _to_sparse(self) -> None:
        d = self.frame.d
        data = {}
        for idx in zip(*np.nonzero(self.arr)):
            data[tuple(int(idx[k]) + self.lo[k] for k in range(d))] = self.arr[idx]
        req = None
        if self.mask is not None:
            req = {tuple(int(idx[k]) + self.lo[k] for k in range(d)) for idx in zip(*np.nonzero(self.mask))}
        self.data, self.req = data, req
        self.dense = False
        self.arr = self.mask = None

    # queries ------------------------------------------------------------
    def nterms(self) -> int:
        if self.dense:
            return int(np.count_nonzero(self.arr))
        return len(self.data)

    def nonnegative(self) -> bool:
        if self.dense:
            return not bool((self.arr < 0).any())
        return all(v >= 0 for v in self.data.values())

    def positive_on_required(self) -> bool:
        if not self.nonnegative():
            return False
        if self.dense:
            if self.mask is None:
                return True
            return bool(np.all(self.arr[self.mask] > 0))
        if self.req is None:
            return True
        return all(self.data.get(p, 0) > 0 for p in self.req)

    def passes(self, mode: str) -> bool:
        if mode == "nonneg":
            return self.nonnegative()
        if mode == "strict_support":
            return self.positive_on_required()
        raise ValueError(f"unknown mode {mode!r}")

    def _full(self, p: Sequence[int]) -> Exponent:
        return self.frame.lift(p, self.base)

    def offenders(self, mode: str = "nonneg", limit: int | None = None) -> list[tuple[Exponent, Fraction]]:
        """Negative terms, plus nonpositive required points in strict mode."""
        out: dict[Exponent, Fraction] = {}
        d = self.frame.d
        if self.dense:
            bad = self.arr < 0
            if mode == "strict_support" and self.mask is not None:
                bad = bad | (self.mask & ~(self.arr > 0))
            for idx in zip(*np.nonzero(bad)):
                p = tuple(int(idx[k]) + self.lo[k] for k in range(d))
                out[self._full(p)] = Fraction(self.arr[idx], self.den)
        else:
            for p, v in self.data.items():
                if v < 0:
                    out[self._full(p)] = Fraction(v, self.den)
            if mode == "strict_support" and self.req is not None:
                for p in self.req:
                    if self.data.get(p, 0) <= 0:
                        out[self._full(p)] = Fraction(self.data.get(p, 0), self.den)
        items = sorted(out.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)
        return items if limit is None else items[:limit]

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        p = self.frame.project(exp)
        if self._full(p) != tuple(exp):
            return Fraction(0)
        d = self.frame.d
        if self.dense:
            idx = tuple(p[k] - self.lo[k] for k in range(d))
            if any(i < 0 or i >= s for i, s in zip(idx, self.arr.shape)):
                return Fraction(0)
            return Fraction(self.arr[idx], self.den)
        return Fraction(self.data.get(p, 0), self.den)

    def to_poly(self, names=None) -> SparsePoly:
        d = self.frame.d
        terms: dict[Exponent, Fraction] = {}
        if self.dense:
            for idx in zip(*np.nonzero(self.arr)):
                p = tuple(int(idx[k]) + self.lo[k] for k in range(d))
                terms[self._full(p)] = Fraction(self.arr[idx], self.den)
        else:
            for p, v in self.data.items():
                terms[self._full(p)] = Fraction(v, self.den)
        return SparsePoly._raw(self.n, terms, tuple(names) if names else None)

    def copy(self) -> "ProductState":
        other = ProductState.__new__(ProductState)
        other.__dict__.update(self.__dict__)
        other.exponents = list(self.exponents)
        other.base = list(self.base)
        if self.dense:
            other.arr = self.arr.copy()
            other.mask = None if self.mask is None else self.mask.copy()
        else:
            other.data = dict(self.data)
            other.req = None if self.req is None else set(self.req)
        return other


def _cells(shape: Sequence[int]) -> int:
    out = 1
    for s in shape:
        out *= s
    return out
