"""Cox homogenization and the Cox-coordinate Pólya searches.

For a full-dimensional lattice polytope P = {a : F^T a + b >= 0} with r
facets, f_cox(x) = Σ c_a x^{F^T a + b} lives in r variables. When P is a
product of simplices, powers of either the sums over primitive
collections or the sum of irrelevant-ideal generators certify strict
copositivity of f once they make f_cox(x^v) coefficientwise nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._engine import ProductState
from .geom import (FanData, LatticePolytope, NotSimplexProduct, SimplexProductDecomposition, detect_simplex_product,
                   enumerate_faces, fan_data, faces, kernel_basis, newton_polytope)
from .polya import Certificate, Status, Witness, run_search
from .polycore import SparsePoly, evaluate, substitute_monomial_map, truncate

VARIANTS = ("primitive", "irrelevant")


class SimplexProductRequired(ValueError):
    """The polytope is not a product of simplices; ``condition`` says why."""

    def __init__(self, condition: str, detail: str = ""):
        super().__init__(f"polytope is not a product of simplices ({condition}: {detail})")
        self.condition = condition
        self.detail = detail


@dataclass(frozen=True)
class CoxContext:
    polytope: LatticePolytope
    fan: FanData
    decomposition: SimplexProductDecomposition | None
    rejection: NotSimplexProduct | None = None

    @classmethod
    def from_polytope(cls, P: LatticePolytope, normals: Sequence[Sequence[int]] | None = None) -> "CoxContext":
        if not P.is_full_dimensional():
            raise ValueError("Cox coordinates need a full-dimensional polytope")
        if normals is not None:
            P = P.reorder(normals)
        try:
            dec, rej = detect_simplex_product(P), None
        except NotSimplexProduct as exc:
            dec, rej = None, exc
        return cls(P, fan_data(P), dec, rej)

    @classmethod
    def from_poly(cls, f: SparsePoly, normals: Sequence[Sequence[int]] | None = None) -> "CoxContext":
        return cls.from_polytope(newton_polytope(f), normals)

    @property
    def r(self) -> int:
        return self.polytope.r

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(self.polytope.offsets)

    @property
    def F(self) -> list[list[int]]:
        return self.polytope.F

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(self.r))

    def to_json(self) -> dict:
        return {
            "polytope": self.polytope.to_json(),
            "fan": self.fan.to_json(),
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
            "rejection": None if self.rejection is None else str(self.rejection),
            "v": None if self.decomposition is None else list(self.decomposition.v),
        }


def _cox_map(F: Sequence[Sequence[int]], b: Sequence[int], v: Sequence[int] | None = None):
    """(M, shift) with x^{v∘(F^T a + b)} = x^{M a + shift}."""
    n, r = len(F), len(b)
    vv = list(v) if v is not None else [1] * r
    M = [[vv[i] * F[k][i] for k in range(n)] for i in range(r)]
    shift = [vv[i] * b[i] for i in range(r)]
    return M, shift


def cox_homogenize(f: SparsePoly, ctx: CoxContext) -> SparsePoly:
    P = ctx.polytope
    if f.n != P.n:
        raise ValueError("dimension mismatch")
    outside = [a for a in f.support() if not P.contains(a)]
    if outside:
        raise ValueError(f"support point {list(min(outside))} lies outside the polytope")
    M, shift = _cox_map(ctx.F, ctx.b)
    return substitute_monomial_map(f, M, shift, ctx.names)


def diagonal_substitute(poly: SparsePoly, v: Sequence[int]) -> SparsePoly:
    """poly(x^v): x_i -> x_i^{v_i}."""
    M = [[v[i] if i == j else 0 for j in range(poly.n)] for i in range(poly.n)]
    return substitute_monomial_map(poly, M, None, poly.names)


def phi(F: Sequence[Sequence[int]], x: Sequence) -> tuple[Fraction, ...]:
    """φ_{F^T}(x): t_k = Π_i x_i^{F[k][i]}."""
    out = []
    for row in F:
        val = Fraction(1)
        for xi, e in zip(x, row):
            val *= Fraction(xi) ** e
        out.append(val)
    return tuple(out)


def cox_truncation_check(f: SparsePoly, ctx: CoxContext, I: Sequence[int], points: Sequence[Sequence]) -> bool:
    """Check f_cox(x_I) = x^b · f^{G_I}(φ_{F^T}(x)) at the given positive points."""
    act = frozenset(I)
    P = ctx.polytope
    match = [fc for fc in faces(P) if fc.active == act]
    if not match:
        raise ValueError(f"{sorted(act)} is not the active set of a face")
    face = match[0]
    fcox = cox_homogenize(f, ctx)
    fg = truncate(f, [a for a in f.support() if face.contains(a)])
    for x in points:
        x = [Fraction(c) for c in x]
        if any(c <= 0 for c in x):
            raise ValueError("sample points must be positive")
        xI = [Fraction(0) if i + 1 in act else c for i, c in enumerate(x)]
        lhs = evaluate(fcox, xI, allow_zero=True)
        xb = Fraction(1)
        for c, e in zip(x, ctx.b):
            xb *= c ** e
        rhs = xb * evaluate(fg, phi(ctx.F, x)) if not fg.is_zero() else Fraction(0)
        if lhs != rhs:
            return False
    return True


def _resolve_v(ctx: CoxContext, v, expert: bool, allow_non_product: bool) -> tuple[int, ...]:
    if v is None:
        if ctx.decomposition is None:
            raise SimplexProductRequired(*_reason(ctx))
        return tuple(ctx.decomposition.v)
    if not (expert or allow_non_product):
        raise ValueError("a custom v needs expert=True")
    v = tuple(int(x) for x in v)
    F = ctx.F
    if len(v) != ctx.r or any(x <= 0 for x in v):
        raise ValueError("v must be a positive vector with one entry per facet")
    if any(sum(F[k][i] * v[i] for i in range(ctx.r)) != 0 for k in range(len(F))):
        raise ValueError("v is not in the kernel of F")
    return v


def _reason(ctx: CoxContext) -> tuple[str, str]:
    rej = ctx.rejection
    return (rej.condition, rej.detail) if rej is not None else ("unknown", "")


def cox_multipliers(ctx: CoxContext, variant: str) -> list[SparsePoly]:
    r = ctx.r
    if variant == "irrelevant":
        return [SparsePoly(r, {g: 1 for g in ctx.fan.irrelevant_generators}, ctx.names)]
    if variant == "primitive":
        out = []
        for c in ctx.fan.primitive_collections:
            out.append(SparsePoly(r, {tuple(int(i + 1 == j) for i in range(r)): 1 for j in c}, ctx.names))
        return out
    raise ValueError(f"variant must be one of {VARIANTS}")


def cox_certify(f: SparsePoly, ctx: CoxContext, variant: str = "irrelevant", n_max: int = 64, *,
                v: Sequence[int] | None = None, expert: bool = False, allow_non_product: bool = False,
                mode: str = "nonneg", history_limit: int | None = 20, emit_product: bool = False) -> Certificate:
    """Search for a Cox-coordinate Pólya certificate of f.

    ``allow_non_product`` is a test hook: it lets the search run on a
    polytope that is not a product of simplices, where the theory gives
    no guarantee.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if ctx.decomposition is None and not allow_non_product:
        raise SimplexProductRequired(*_reason(ctx))
    if f.is_zero():
        raise ValueError("zero polynomial")
    vv = _resolve_v(ctx, v, expert, allow_non_product)
    P = ctx.polytope
    gs = cox_multipliers(ctx, variant)
    cox_info = {"variant": variant, "v": list(vv), "F": [list(r) for r in ctx.F], "b": list(ctx.b)}
    Pf = newton_polytope(f)
    if set(Pf.vertices) != set(P.vertices):
        miss = sorted(set(P.vertices) - set(Pf.vertices)) or sorted(set(Pf.vertices) - set(P.vertices))
        w = Witness((), tuple(Fraction(1) for _ in range(f.n)), f.coeff(miss[0]),
                    note=f"vertex {list(miss[0])} of the context polytope is not a vertex of Newt(f)")
        return Certificate(Status.REFUTED_NEWTON, f"cox-{variant}", gs, None, None, [], mode,
                           target=f, source=f, witness=w, cox=cox_info)
    M, shift = _cox_map(ctx.F, ctx.b, vv)
    h = substitute_monomial_map(f, M, shift, ctx.names)
    kind = f"cox-{variant}"
    if variant == "irrelevant":
        N, state, hist = run_search(h, gs[0], n_max, mode, sorted(h.support()), history_limit)
        exps = (N,) if N is not None else (n_max,)
    else:
        N, state, hist, exps = _primitive_search(h, gs, n_max, mode, history_limit)
    if N is None:
        return Certificate(Status.UNKNOWN, kind, gs, tuple(exps), state.nterms(), state.offenders(mode), mode,
                           target=h, source=f, history=hist, cox=cox_info, newton_guard=True)
    return Certificate(Status.CERTIFIED, kind, gs, tuple(exps), state.nterms(), [], mode, target=h, source=f,
                       history=hist, cox=cox_info,
                       product=state.to_poly(ctx.names) if emit_product else None)


def _primitive_search(h: SparsePoly, gs: list[SparsePoly], n_max: int, mode: str, history_limit):
    k = len(gs)
    required = sorted(h.support()) if mode == "strict_support" else None
    state = ProductState(h, gs, required)
    hist = []
    found = None
    for N in range(n_max + 1):
        if N:
            for j in range(k):
                state.times(j)
        ok = state.passes(mode)
        if history_limit != 0:
            hist.append(((N,) * k, [] if ok else state.offenders(mode, history_limit)))
        if ok:
            found = N
            break
    if found is None:
        return None, state, hist, (n_max,) * k
    exps = [found] * k
    best = state
    # axis refinement: lower one exponent at a time, others fixed
    for j in range(k):
        base = ProductState(h, gs, required)
        for i in range(k):
            if i != j:
                for _ in range(exps[i]):
                    base.times(i)
        for e in range(exps[j] + 1):
            if e:
                base.times(j)
            if base.passes(mode):
                exps[j] = e
                best = base
                break
    return found, best, hist, tuple(exps)


def recompute_cox_target(f: SparsePoly, cert: Certificate) -> SparsePoly:
    """Rebuild f_cox(x^v) from the certificate's facet data, checking it against Newt(f)."""
    info = cert.cox or {}
    F, b, v = info.get("F"), info.get("b"), info.get("v")
    if F is None or b is None or v is None:
        raise ValueError("certificate lacks facet data")
    P = newton_polytope(f)
    facets = {(tuple(nm), int(o)) for nm, o in zip(P.normals, P.offsets)}
    r = len(b)
    claimed = {(tuple(F[k][i] for k in range(len(F))), int(b[i])) for i in range(r)}
    if facets != claimed or len(facets) != r:
        raise ValueError("facet data does not describe Newt(f)")
    if any(x <= 0 for x in v) or any(sum(F[k][i] * v[i] for i in range(r)) != 0 for k in range(len(F))):
        raise ValueError("v is not a positive kernel vector")
    M, shift = _cox_map(F, b, v)
    return substitute_monomial_map(f, M, shift, tuple(f"x{i + 1}" for i in range(r)))


def multihomogeneity_degrees(poly: SparsePoly, ctx: CoxContext | None = None,
                             weights: Sequence[Sequence[int]] | None = None,
                             strict: bool = False) -> list[tuple[tuple[int, ...], int | None]]:
    """Weighted degree of every term, per weight vector.

    Returns (w, d) where d is the common degree or None when the terms
    disagree. Default weights are an integer basis of ker(F). With
    ``strict`` a non-constant degree, or a degree other than w·b, raises.
    """
    if poly.is_zero():
        raise ValueError("zero polynomial")
    if weights is None:
        if ctx is None:
            raise ValueError("need a context or explicit weights")
        weights = kernel_basis(ctx.F)
    out = []
    for w in weights:
        w = tuple(int(x) for x in w)
        if len(w) != poly.n:
            raise ValueError("weight length does not match the number of variables")
        degs = {sum(a * b for a, b in zip(w, e)) for e in poly.support()}
        d = next(iter(degs)) if len(degs) == 1 else None
        if strict:
            if d is None:
                raise ValueError(f"degree is not constant for weight {list(w)}")
            if ctx is not None and d != sum(a * b for a, b in zip(w, ctx.b)):
                raise ValueError(f"degree {d} differs from w·b for weight {list(w)}")
        out.append((w, d))
    return out


def irrelevant_membership_check(poly: SparsePoly, ctx: CoxContext) -> bool:
    """Every monomial divisible by some irrelevant generator."""
    gens = ctx.fan.irrelevant_generators
    for e in poly.support():
        if not any(all(x >= g for x, g in zip(e, gen)) for gen in gens):
            return False
    return True


def face_active_sets(ctx: CoxContext) -> list[frozenset[int]]:
    return enumerate_faces(ctx.polytope)
