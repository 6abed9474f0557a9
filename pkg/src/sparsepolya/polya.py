"""Multiplier-power searches with Newton-polytope prechecks.

``sparse_polya_certify`` multiplies f by powers of g = Σ_{a∈A} t^a until
no coefficient is negative (mode ``nonneg``) or until every point of
(k+N)·A carries a positive coefficient (mode ``strict_support``). The
first passing N is reported; a budget overrun is ``Unknown``, never a
refutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from ._engine import ProductState
from .geom import convex_hull, faces, minkowski_power, newton_polytope
from .polycore import Exponent, SparsePoly, evaluate, truncate

MODES = ("nonneg", "strict_support")


class Status(str, Enum):
    CERTIFIED = "Certified"
    REFUTED_NEWTON = "RefutedNewton"
    REFUTED_WITNESS = "RefutedWitness"
    UNKNOWN = "Unknown"


@dataclass
class SearchConfig:
    n_max: int = 64
    mode: str = "nonneg"
    emit_product: bool = False
    k: int = 1
    support_A: Sequence[Sequence[int]] | None = None
    history_limit: int | None = 20

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.k < 1:
            raise ValueError("k must be positive")


@dataclass
class Witness:
    """f^G evaluated at a positive point; sound refutation when value <= 0."""

    face: tuple[int, ...]
    point: tuple[Fraction, ...]
    value: Fraction
    note: str = ""


@dataclass
class Certificate:
    status: Status
    kind: str
    multipliers: list[SparsePoly]
    exponents: tuple[int, ...] | None
    product_terms: int | None
    offenders: list[tuple[Exponent, Fraction]]
    mode: str
    target: SparsePoly
    source: SparsePoly
    witness: Witness | None = None
    k: int = 1
    support_A: tuple[Exponent, ...] | None = None
    newton_guard: bool = True
    history: list[tuple[tuple[int, ...], list[tuple[Exponent, Fraction]]]] = field(default_factory=list)
    product: SparsePoly | None = None
    cox: dict | None = None
    # total offender count when ``offenders`` was read back truncated
    offender_count: int | None = None

    @property
    def N(self):
        """Scalar exponent for single-multiplier searches."""
        if self.exponents is None:
            return None
        return self.exponents[0] if len(self.exponents) == 1 else self.exponents

    @property
    def multiplier(self) -> SparsePoly:
        return self.multipliers[0]

    @property
    def certified(self) -> bool:
        return self.status is Status.CERTIFIED


def _check_nonneg_multiplier(g: SparsePoly) -> None:
    if g.is_zero():
        raise ValueError("zero multiplier")
    if any(c < 0 for c in g.terms.values()):
        raise ValueError("multiplier has a negative coefficient")


def _ones(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) for _ in range(n))


def run_search(target: SparsePoly, multiplier: SparsePoly, n_max: int, mode: str,
               required: Sequence[Exponent] | None = None, history_limit: int | None = 20,
               keep_state: bool = False):
    """Ascending search over N = 0..n_max. Returns (N or None, state, history)."""
    state = ProductState(target, [multiplier], required if mode == "strict_support" else None)
    history = []
    for N in range(n_max + 1):
        if N:
            state.times(0)
        ok = state.passes(mode)
        if history_limit != 0:
            offs = [] if ok else state.offenders(mode, history_limit)
            history.append(((N,), offs))
        if ok:
            return N, state, history
    return None, state, history


def _finish(status_N, state, history, cfg: SearchConfig, **kw) -> Certificate:
    N = status_N
    common = dict(mode=cfg.mode, history=history, **kw)
    if N is not None:
        return Certificate(Status.CERTIFIED, exponents=(N,), product_terms=state.nterms(), offenders=[],
                           product=state.to_poly(kw["target"].names) if cfg.emit_product else None, **common)
    return Certificate(Status.UNKNOWN, exponents=(cfg.n_max,), product_terms=state.nterms(),
                       offenders=state.offenders(cfg.mode), **common)


def newton_guard(f: SparsePoly, A: Sequence[Exponent], k: int):
    """None when Newt(f) = conv(k·A), else a missing vertex of conv(k·A)."""
    P = newton_polytope(f)
    Q = convex_hull(A)
    scaled = {tuple(k * x for x in v) for v in Q.vertices}
    got = set(P.vertices)
    if got == scaled:
        return None
    missing = sorted(scaled - got)
    if missing:
        return missing[0]
    # Newt(f) has a vertex that is not a vertex of conv(kA); report it
    return sorted(got - scaled)[0]


def _prechecks(f: SparsePoly, A: list[Exponent], k: int, cfg: SearchConfig, kind: str, g: SparsePoly):
    base = dict(kind=kind, multipliers=[g], target=f, source=f, k=k, support_A=tuple(A), mode=cfg.mode)
    bad = newton_guard(f, A, k)
    if bad is not None:
        w = Witness(face=(), point=_ones(f.n), value=f.coeff(bad),
                    note=f"vertex {list(bad)} of conv(k*A) carries coefficient {f.coeff(bad)}")
        return Certificate(Status.REFUTED_NEWTON, exponents=None, product_terms=None, offenders=[],
                           witness=w, **base)
    P = newton_polytope(f)
    for idx, v in enumerate(P.vertices):
        c = f.coeff(v)
        if c <= 0:
            w = Witness(face=tuple(sorted(P.vertex_facets(idx))), point=_ones(f.n), value=c,
                        note=f"vertex {list(v)} has nonpositive coefficient")
            return Certificate(Status.REFUTED_WITNESS, exponents=None, product_terms=None, offenders=[],
                               witness=w, **base)
    return None


def sparse_polya_certify(f: SparsePoly, cfg: SearchConfig | None = None) -> Certificate:
    cfg = cfg or SearchConfig()
    if f.is_zero():
        raise ValueError("zero polynomial")
    k = cfg.k
    if cfg.support_A is not None:
        A = sorted({tuple(a) for a in cfg.support_A})
        if any(len(a) != f.n for a in A):
            raise ValueError("support_A has the wrong dimension")
        if not f.support() <= set(minkowski_power(A, k).points):
            raise ValueError("inconsistent support_A: supp(f) is not contained in k*A")
    else:
        if k != 1:
            raise ValueError("k > 1 needs an explicit support_A")
        A = sorted(f.support())
    return _certify_support(f, A, k, cfg, "sparse")


def _certify_support(f: SparsePoly, A: list[Exponent], k: int, cfg: SearchConfig, kind: str) -> Certificate:
    g = SparsePoly(f.n, {a: 1 for a in A}, f.names)
    pre = _prechecks(f, A, k, cfg, kind, g)
    if pre is not None:
        return pre
    required = list(minkowski_power(A, k).points) if cfg.mode == "strict_support" else None
    N, state, hist = run_search(f, g, cfg.n_max, cfg.mode, required, cfg.history_limit)
    return _finish(N, state, hist, cfg, kind=kind, multipliers=[g], target=f, source=f,
                   k=k, support_A=tuple(A))


def classical_polya_certify(f: SparsePoly, cfg: SearchConfig | None = None) -> Certificate:
    """Pólya's multiplier (t_1 + ... + t_n) for a homogeneous form."""
    cfg = cfg or SearchConfig()
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("classical Pólya needs a homogeneous polynomial")
    if any(x < 0 for e in f.support() for x in e):
        raise ValueError("classical Pólya needs nonnegative exponents")
    deg = f.total_degree()
    A = [tuple(int(i == j) for j in range(f.n)) for i in range(f.n)]
    if deg == 0:
        # a constant: the guard compares a point with a point
        A = [(0,) * f.n]
        deg = 1
    return _certify_support(f, A, deg, cfg, "classical")


def certify_with_multiplier(f: SparsePoly, g: SparsePoly, cfg: SearchConfig | None = None) -> Certificate:
    """Power search with a user multiplier; no Newton guard."""
    cfg = cfg or SearchConfig()
    if f.is_zero():
        raise ValueError("zero polynomial")
    if g.n != f.n:
        raise ValueError("dimension mismatch")
    _check_nonneg_multiplier(g)
    required = None
    if cfg.mode == "strict_support":
        # positivity is required on supp(f) + N·supp(g)
        required = sorted(f.support())
    N, state, hist = run_search(f, g, cfg.n_max, cfg.mode, required, cfg.history_limit)
    return _finish(N, state, hist, cfg, kind="custom", multipliers=[g], target=f, source=f,
                   newton_guard=False)


@dataclass(frozen=True)
class FaceSample:
    face: tuple[int, ...]
    point: tuple[Fraction, ...]
    value: Fraction


def sample_points(n: int, count: int, seed: int = 0) -> list[tuple[Fraction, ...]]:
    """Deterministic rational points with coordinates in [1/10, 10]."""
    rng = random.Random(seed)
    return [tuple(Fraction(rng.randint(1, 100), 10) for _ in range(n)) for _ in range(count)]


def face_truncations(f: SparsePoly):
    """(face, f^G) for every nonempty face G of Newt(f)."""
    P = newton_polytope(f)
    for face in faces(P):
        yield face, truncate(f, [a for a in f.support() if face.contains(a)])


def face_positivity_diagnostics(f: SparsePoly, samples_per_face: int = 10, seed: int = 0) -> list[FaceSample]:
    """Evaluate every face truncation at seeded positive points.

    A value <= 0 refutes strict copositivity on supp(f); all-positive
    output proves nothing.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    pts = sample_points(f.n, samples_per_face, seed)
    out = []
    for face, fg in face_truncations(f):
        for p in pts:
            out.append(FaceSample(tuple(sorted(face.active)), p, evaluate(fg, p)))
    return out


def product_of(target: SparsePoly, multipliers: Sequence[SparsePoly], exponents: Sequence[int]) -> ProductState:
    """Fresh evaluation of Π g_j^{N_j} · target."""
    state = ProductState(target, list(multipliers))
    for j, e in enumerate(exponents):
        for _ in range(e):
            state.times(j)
    return state


def verify_certificate(f: SparsePoly, cert: Certificate) -> bool:
    """Recompute the product from scratch and re-run every check."""
    if cert.status is not Status.CERTIFIED:
        raise ValueError("only Certified certificates can be verified")
    if cert.exponents is None or len(cert.exponents) != len(cert.multipliers):
        raise ValueError("malformed certificate: exponent/multiplier mismatch")
    if f != cert.source:
        return False
    for g in cert.multipliers:
        if g.n != cert.target.n or any(c < 0 for c in g.terms.values()):
            return False
    target = cert.target
    if cert.kind in ("sparse", "classical"):
        A = list(cert.support_A or ())
        g_expect = SparsePoly(f.n, {a: 1 for a in A})
        if cert.multipliers[0] != g_expect or target != f:
            return False
        if newton_guard(f, A, cert.k) is not None:
            return False
    elif cert.kind.startswith("cox"):
        from .cox import recompute_cox_target
        try:
            if recompute_cox_target(f, cert) != target:
                return False
        except ValueError:
            return False
    elif target != f:
        return False
    state = product_of(target, cert.multipliers, cert.exponents)
    if cert.mode == "strict_support":
        req = _required_points(cert)
        prod = state.to_poly()
        return (all(prod.coeff(p) > 0 for p in req) and all(c > 0 for c in prod.terms.values())
                and len(prod) == cert.product_terms)
    return state.nonnegative() and state.nterms() == cert.product_terms


def _required_points(cert: Certificate) -> list[Exponent]:
    N = cert.exponents[0]
    if cert.kind in ("sparse", "classical"):
        return list(minkowski_power(cert.support_A, cert.k + N).points)
    g = cert.multipliers[0]
    if N == 0:
        return sorted(cert.target.support())
    pts = set(cert.target.support())
    for _ in range(N):
        pts = {tuple(a + b for a, b in zip(p, q)) for p in pts for q in g.support()}
    return sorted(pts)
