"""Symanzik polynomials, Euclidean regions and the convergence check.

Edges are numbered from 1 in the order given; edge e carries the
variable x_e. Parameters (masses, Mandelstam variables) are kept
symbolic as linear forms until ``instantiate`` fixes them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .geom import convex_hull, newton_polytope, relint_contains, scale_polytope
from .polya import Certificate, SearchConfig, sparse_polya_certify
from .polycore import Exponent, SparsePoly, to_fraction

# ---------------------------------------------------------------------------
# linear forms

_LF_TOKEN = re.compile(r"\s*(?:(?P<num>\d+\.\d*|\.\d+|\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/()]))")


@dataclass(frozen=True)
class ParamLinearForm:
    """constant + Σ coeff·param with exact rationals; zero coefficients are never stored."""

    constant: Fraction = Fraction(0)
    coefficients: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def make(cls, constant=0, coefficients: Mapping[str, object] | None = None) -> "ParamLinearForm":
        co = {k: to_fraction(v) for k, v in (coefficients or {}).items()}
        return cls(to_fraction(constant), tuple(sorted((k, v) for k, v in co.items() if v)))

    @classmethod
    def const(cls, c) -> "ParamLinearForm":
        return cls.make(c)

    @classmethod
    def param(cls, name: str) -> "ParamLinearForm":
        return cls.make(0, {name: 1})

    @classmethod
    def parse(cls, text) -> "ParamLinearForm":
        if isinstance(text, ParamLinearForm):
            return text
        if isinstance(text, int) and not isinstance(text, bool):
            return cls.const(text)
        if not isinstance(text, str):
            raise ValueError(f"linear form must be a string, got {type(text).__name__}")
        return _LFParser(text).parse()

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.coefficients)

    @property
    def params(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.coefficients)

    def is_zero(self) -> bool:
        return self.constant == 0 and not self.coefficients

    def is_constant(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "ParamLinearForm") -> "ParamLinearForm":
        co = self.as_dict()
        for k, v in other.coefficients:
            co[k] = co.get(k, Fraction(0)) + v
        return ParamLinearForm.make(self.constant + other.constant, co)

    def __neg__(self) -> "ParamLinearForm":
        return ParamLinearForm(-self.constant, tuple((k, -v) for k, v in self.coefficients))

    def __sub__(self, other: "ParamLinearForm") -> "ParamLinearForm":
        return self + (-other)

    def scale(self, c) -> "ParamLinearForm":
        c = to_fraction(c)
        return ParamLinearForm.make(self.constant * c, {k: v * c for k, v in self.coefficients})

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        out = self.constant
        for k, v in self.coefficients:
            if k not in assignment:
                raise KeyError(f"missing value for parameter {k!r}")
            out += v * to_fraction(assignment[k])
        return out

    def __str__(self) -> str:
        parts = []
        for k, v in self.coefficients:
            parts.append((v, k))
        if self.constant or not parts:
            parts.append((self.constant, ""))
        out = ""
        for i, (v, k) in enumerate(parts):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if k:
                body = k if a == 1 else (f"{a.numerator}*{k}" if a.denominator == 1 else f"{a.numerator}*{k}/{a.denominator}")
            else:
                body = str(a)
            out += (("-" if sign == "-" else "") + body) if i == 0 else f" {sign} {body}"
        return out


class _LFParser:
    """Recursive descent over sums of (number | name) products with rational scaling."""

    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if not text[pos:].strip():
                break
            m = _LF_TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"bad character {text[pos]!r} at column {pos + 1} in {text!r}")
            self.toks.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def fail(self, msg: str):
        col = self.peek()[2] + 1
        raise ValueError(f"{msg} at column {col} in {self.text!r}")

    def parse(self) -> ParamLinearForm:
        if not self.toks:
            raise ValueError("empty linear form")
        out = self.sum()
        if self.i != len(self.toks):
            self.fail("unexpected token")
        return out

    def sum(self) -> ParamLinearForm:
        acc = ParamLinearForm()
        first = True
        while True:
            kind, val, _ = self.peek()
            sign = 1
            if kind == "op" and val in "+-":
                while self.peek()[0] == "op" and self.peek()[1] in "+-":
                    if self.take()[1] == "-":
                        sign = -sign
            elif not first:
                break
            acc = acc + self.product().scale(sign)
            first = False
            if self.peek()[0] != "op" or self.peek()[1] not in "+-":
                break
        return acc

    def product(self) -> ParamLinearForm:
        acc = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.atom()
            if op == "/":
                if not rhs.is_constant() or rhs.constant == 0:
                    self.fail("division by a non-constant or zero")
                acc = acc.scale(1 / rhs.constant)
            elif rhs.is_constant():
                acc = acc.scale(rhs.constant)
            elif acc.is_constant():
                acc = rhs.scale(acc.constant)
            else:
                self.fail("product of two parameters is not linear")
        return acc

    def atom(self) -> ParamLinearForm:
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return ParamLinearForm.const(Fraction(val))
        if kind == "name":
            self.take()
            return ParamLinearForm.param(val)
        if kind == "op" and val == "(":
            self.take()
            inner = self.sum()
            if self.take()[1] != ")":
                self.fail("missing ')'")
            return inner
        if kind == "op" and val == "-":
            self.take()
            return -self.atom()
        self.fail("expected a number, a name or '('")


# ---------------------------------------------------------------------------
# parametric polynomials

@dataclass(frozen=True)
class ParamPoly:
    n: int
    terms: Mapping[Exponent, ParamLinearForm]

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[tuple[str, str]], names: Sequence[str] | None = None) -> "ParamPoly":
        """Build from (monomial text, linear form text) pairs like ("x1*x2^2", "m1 - s")."""
        from .polycore import parse_poly
        names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(n))
        terms: dict[Exponent, ParamLinearForm] = {}
        for mono, form in pairs:
            (e,) = parse_poly(mono, names).support()
            terms[e] = terms.get(e, ParamLinearForm()) + ParamLinearForm.parse(form)
        return cls(n, {e: c for e, c in terms.items() if not c.is_zero()})

    @property
    def params(self) -> frozenset[str]:
        out: set[str] = set()
        for c in self.terms.values():
            out |= c.params
        return frozenset(out)

    def support(self) -> frozenset[Exponent]:
        return frozenset(self.terms)

    def coeff(self, e: Sequence[int]) -> ParamLinearForm:
        return self.terms.get(tuple(e), ParamLinearForm())

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamPoly) and self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def items(self):
        from .polycore import grevlex_key
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def to_json(self) -> dict:
        return {"n": self.n, "variables": [f"x{i + 1}" for i in range(self.n)],
                "terms": [{"exponent": list(e), "coefficient": str(c)} for e, c in self.items()]}

    def __str__(self) -> str:
        out = []
        for e, c in self.items():
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k) or "1"
            out.append(f"({c})*{mono}")
        return " + ".join(out) if out else "0"


# ---------------------------------------------------------------------------
# graphs and kinematics

@dataclass(frozen=True)
class MassTag:
    kind: str  # "symbol" | "zero" | "fixed"
    value: object = None

    @classmethod
    def parse(cls, text) -> "MassTag":
        if isinstance(text, int) and not isinstance(text, bool):
            text = str(text)
        if not isinstance(text, str) or not text.strip():
            raise ValueError(f"bad mass tag {text!r}")
        t = text.strip()
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", t):
            return cls("symbol", t)
        try:
            v = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad mass tag {text!r}") from None
        return cls("zero") if v == 0 else cls("fixed", v)

    def form(self) -> ParamLinearForm:
        if self.kind == "symbol":
            return ParamLinearForm.param(self.value)
        if self.kind == "fixed":
            return ParamLinearForm.const(self.value)
        return ParamLinearForm()

    def __str__(self) -> str:
        return "0" if self.kind == "zero" else str(self.value)


@dataclass(frozen=True)
class KinematicSpec:
    """Symmetric table k_ij = p_i·p_j as linear forms, indices from 1."""

    table: Mapping[tuple[int, int], ParamLinearForm]
    momentum_conservation: bool = False

    @classmethod
    def from_json(cls, data: Mapping, legs: int | None = None) -> "KinematicSpec":
        raw = data.get("k", {}) if isinstance(data, Mapping) else None
        if not isinstance(raw, Mapping):
            raise ValueError("kinematics.k must be an object")
        table: dict[tuple[int, int], ParamLinearForm] = {}
        for key, val in raw.items():
            m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", str(key))
            if not m:
                raise ValueError(f"bad kinematics key {key!r}; expected 'i,j'")
            i, j = int(m.group(1)), int(m.group(2))
            if i < 1 or j < 1 or (legs is not None and max(i, j) > legs):
                raise ValueError(f"momentum index out of range in {key!r}")
            form = ParamLinearForm.parse(val)
            k = (min(i, j), max(i, j))
            if k in table and table[k] != form:
                raise ValueError(f"k_{i}{j} and k_{j}{i} disagree")
            table[k] = form
        mc = data.get("momentum_conservation", False)
        if not isinstance(mc, bool):
            raise ValueError("momentum_conservation must be a boolean")
        spec = cls(table, mc)
        if mc:
            spec.check_conservation(legs or max((max(k) for k in table), default=0))
        return spec

    def k(self, i: int, j: int) -> ParamLinearForm:
        key = (min(i, j), max(i, j))
        if key in self.table:
            return self.table[key]
        if i == j:
            # on-shell massless legs unless stated otherwise
            return ParamLinearForm()
        raise KeyError(f"unresolved kinematic symbol k_{key[0]}{key[1]}")

    def check_conservation(self, legs: int) -> None:
        for i in range(1, legs + 1):
            row = ParamLinearForm()
            for j in range(1, legs + 1):
                row = row + self.k(i, j)
            if not row.is_zero():
                raise ValueError(f"momentum conservation fails in row {i}: sum is {row}")

    def to_json(self) -> dict:
        return {"momentum_conservation": self.momentum_conservation,
                "k": {f"{i},{j}": str(v) for (i, j), v in sorted(self.table.items())}}


@dataclass(frozen=True)
class FeynmanGraph:
    vertex_count: int
    internal_edges: tuple[tuple[int, int, MassTag], ...]
    external_legs: tuple[tuple[int, int], ...]  # (vertex, momentum index)
    kinematics: KinematicSpec | None = None

    @classmethod
    def from_json(cls, data: Mapping) -> "FeynmanGraph":
        if not isinstance(data, Mapping):
            raise ValueError("graph must be a JSON object")
        V = data.get("vertices")
        if not isinstance(V, int) or isinstance(V, bool) or V < 1:
            raise ValueError("vertices must be a positive integer")
        edges = []
        for k, e in enumerate(data.get("internal_edges", [])):
            if not isinstance(e, (list, tuple)) or len(e) != 3:
                raise ValueError(f"internal edge {k + 1} must be [u, v, mass]")
            u, v, m = e
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= V:
                    raise ValueError(f"internal edge {k + 1} has a bad endpoint {x!r}")
            edges.append((u, v, MassTag.parse(m)))
        legs = []
        for leg in data.get("external_legs", []):
            vert = leg.get("vertex") if isinstance(leg, Mapping) else None
            mom = leg.get("momentum") if isinstance(leg, Mapping) else None
            if not isinstance(vert, int) or isinstance(vert, bool) or not 1 <= vert <= V:
                raise ValueError(f"external leg has a bad vertex {vert!r}")
            m = re.fullmatch(r"p(\d+)", str(mom))
            if not m or int(m.group(1)) < 1:
                raise ValueError(f"momentum label must look like p1, p2, ...; got {mom!r}")
            legs.append((vert, int(m.group(1))))
        idx = [p for _, p in legs]
        if len(set(idx)) != len(idx):
            raise ValueError("momentum labels must be distinct")
        kin = None
        if "kinematics" in data:
            kin = KinematicSpec.from_json(data["kinematics"], max(idx, default=0))
        g = cls(V, tuple(edges), tuple(legs), kin)
        g.require_connected()
        return g

    @property
    def n_edges(self) -> int:
        return len(self.internal_edges)

    @property
    def loops(self) -> int:
        return self.n_edges - self.vertex_count + 1

    def require_connected(self) -> None:
        uf = _UnionFind(self.vertex_count)
        for u, v, _ in self.internal_edges:
            uf.union(u, v)
        if len({uf.find(x) for x in range(1, self.vertex_count + 1)}) != 1:
            raise ValueError("internal graph is disconnected")

    def momenta_at(self, vertices) -> list[int]:
        vs = set(vertices)
        return sorted(p for v, p in self.external_legs if v in vs)

    def to_json(self) -> dict:
        out = {"vertices": self.vertex_count,
               "internal_edges": [[u, v, str(m)] for u, v, m in self.internal_edges],
               "external_legs": [{"vertex": v, "momentum": f"p{p}"} for v, p in self.external_legs]}
        if self.kinematics is not None:
            out["kinematics"] = self.kinematics.to_json()
        return out


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def _acyclic(G: FeynmanGraph, subset: Sequence[int]) -> _UnionFind | None:
    uf = _UnionFind(G.vertex_count)
    for e in subset:
        u, v, _ = G.internal_edges[e]
        if not uf.union(u, v):
            return None
    return uf


def spanning_trees(G: FeynmanGraph) -> list[tuple[int, ...]]:
    """Spanning trees as sorted tuples of 0-based edge indices, in lexicographic order."""
    G.require_connected()
    return [c for c in combinations(range(G.n_edges), G.vertex_count - 1) if _acyclic(G, c) is not None]


@dataclass(frozen=True)
class TwoForest:
    """Edges and vertex sets of the two trees; T1 holds vertex 1."""

    edges1: tuple[int, ...]
    edges2: tuple[int, ...]
    part1: frozenset[int]
    part2: frozenset[int]

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges1 + self.edges2))


def spanning_2forests(G: FeynmanGraph) -> list[TwoForest]:
    G.require_connected()
    if G.vertex_count < 2:
        return []
    out = []
    for c in combinations(range(G.n_edges), G.vertex_count - 2):
        uf = _acyclic(G, c)
        if uf is None:
            continue
        root1 = uf.find(1)
        p1 = frozenset(x for x in range(1, G.vertex_count + 1) if uf.find(x) == root1)
        p2 = frozenset(range(1, G.vertex_count + 1)) - p1
        e1 = tuple(e for e in c if uf.find(G.internal_edges[e][0]) == root1)
        e2 = tuple(e for e in c if e not in e1)
        out.append(TwoForest(e1, e2, p1, p2))
    return out


def _complement_exponent(n: int, used: Sequence[int]) -> Exponent:
    s = set(used)
    return tuple(0 if e in s else 1 for e in range(n))


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def first_symanzik(G: FeynmanGraph) -> SparsePoly:
    n = G.n_edges
    terms: dict[Exponent, int] = {}
    for T in spanning_trees(G):
        e = _complement_exponent(n, T)
        terms[e] = terms.get(e, 0) + 1
    return SparsePoly(n, terms, _names(n))


def _kinematics(G: FeynmanGraph, kin: KinematicSpec | None) -> KinematicSpec:
    kin = kin if kin is not None else G.kinematics
    if kin is None:
        if G.external_legs:
            raise ValueError("graph has external legs but no kinematics")
        return KinematicSpec({})
    return kin


def forest_momentum(G: FeynmanGraph, kin: KinematicSpec, forest: TwoForest) -> ParamLinearForm:
    """Σ_{i∈I_{T1}, j∈I_{T2}} k_ij."""
    acc = ParamLinearForm()
    for i in G.momenta_at(forest.part1):
        for j in G.momenta_at(forest.part2):
            acc = acc + kin.k(i, j)
    return acc


def _parts(G: FeynmanGraph, kin: KinematicSpec | None):
    kin = _kinematics(G, kin)
    n = G.n_edges
    a1: dict[Exponent, ParamLinearForm] = {}
    for fr in spanning_2forests(G):
        form = forest_momentum(G, kin, fr)
        e = _complement_exponent(n, fr.edges)
        a1[e] = a1.get(e, ParamLinearForm()) + form
    a2: dict[Exponent, ParamLinearForm] = {}
    U = first_symanzik(G)
    for k, (_, _, mtag) in enumerate(G.internal_edges):
        m = mtag.form()
        if m.is_zero():
            continue
        for u in U.support():
            e = tuple(x + int(i == k) for i, x in enumerate(u))
            a2[e] = a2.get(e, ParamLinearForm()) + m.scale(U.coeff(u))
    return a1, a2


def second_symanzik(G: FeynmanGraph, kin: KinematicSpec | None = None) -> ParamPoly:
    a1, a2 = _parts(G, kin)
    terms = dict(a1)
    for e, f in a2.items():
        terms[e] = terms.get(e, ParamLinearForm()) + f
    return ParamPoly(G.n_edges, {e: c for e, c in terms.items() if not c.is_zero()})


@dataclass(frozen=True)
class SupportFlag:
    in_forest_part: bool
    in_mass_part: bool
    mass_symbol: bool
    vertex: bool


def generic_support(G: FeynmanGraph, kin: KinematicSpec | None = None) -> tuple[list[Exponent], dict[Exponent, SupportFlag]]:
    """Support of F for generic parameter values, with per-point flags."""
    a1, a2 = _parts(G, kin)
    F = second_symanzik(G, kin)
    pts = sorted(F.support())
    if not pts:
        return [], {}
    verts = set(convex_hull(pts).vertices)
    masses = {m.value for _, _, m in G.internal_edges if m.kind == "symbol"}
    flags = {}
    for p in pts:
        in1 = p in a1 and not a1[p].is_zero()
        in2 = p in a2 and not a2[p].is_zero()
        flags[p] = SupportFlag(in1, in2, bool(F.coeff(p).params & masses), p in verts)
    return pts, flags


def instantiate(F: ParamPoly, assignment: Mapping[str, object]) -> SparsePoly:
    missing = sorted(F.params - set(assignment))
    if missing:
        raise ValueError(f"missing parameter values: {', '.join(missing)}")
    vals = {k: to_fraction(v) for k, v in assignment.items()}
    return SparsePoly(F.n, {e: c.evaluate(vals) for e, c in F.terms.items()}, _names(F.n))


# ---------------------------------------------------------------------------
# strict feasibility by Fourier–Motzkin

@dataclass
class Nonempty:
    witness: dict[str, Fraction]

    @property
    def nonempty(self) -> bool:
        return True


@dataclass
class Empty:
    """Σ λ_a ℓ_a is a constant <= 0 with λ >= 0, so the ℓ_a > 0 cannot all hold."""

    combination: list[tuple[Exponent, Fraction]]
    constant: Fraction

    @property
    def nonempty(self) -> bool:
        return False


@dataclass
class _Row:
    coef: dict[str, Fraction]
    const: Fraction
    trace: dict[int, Fraction] = field(default_factory=dict)


def _normalize(row: _Row) -> _Row:
    vals = [abs(v) for v in row.coef.values()]
    if not vals:
        return row
    s = max(vals)
    return _Row({k: v / s for k, v in row.coef.items()}, row.const / s, {i: m / s for i, m in row.trace.items()})


def strict_feasibility(forms: Sequence[ParamLinearForm]):
    """Decide whether every form can be made > 0. Returns (witness dict, None) or (None, (trace, constant))."""
    rows = [_Row(dict(f.coefficients), f.constant, {i: Fraction(1)}) for i, f in enumerate(forms)]
    order = sorted(set().union(*(f.params for f in forms))) if forms else []
    stages: list[tuple[str, list[_Row]]] = []
    for var in order:
        bad = _contradiction(rows)
        if bad is not None:
            return None, bad
        stages.append((var, rows))
        pos = [r for r in rows if r.coef.get(var, 0) > 0]
        neg = [r for r in rows if r.coef.get(var, 0) < 0]
        new = [r for r in rows if r.coef.get(var, 0) == 0]
        for p in pos:
            for q in neg:
                a, b = p.coef[var], -q.coef[var]
                coef = {}
                for k in set(p.coef) | set(q.coef):
                    if k == var:
                        continue
                    v = b * p.coef.get(k, 0) + a * q.coef.get(k, 0)
                    if v:
                        coef[k] = v
                trace = dict((i, b * m) for i, m in p.trace.items())
                for i, m in q.trace.items():
                    trace[i] = trace.get(i, 0) + a * m
                new.append(_normalize(_Row(coef, b * p.const + a * q.const, trace)))
        rows = _dedupe(new)
    bad = _contradiction(rows)
    if bad is not None:
        return None, bad
    # back-substitution, last eliminated first
    values: dict[str, Fraction] = {}
    for var, rs in reversed(stages):
        lo, hi = None, None
        for r in rs:
            a = r.coef.get(var, 0)
            if not a:
                continue
            rest = r.const + sum(v * values[k] for k, v in r.coef.items() if k != var)
            bound = -rest / a
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        values[var] = _pick(lo, hi)
    return values, None


def _dedupe(rows: list[_Row]) -> list[_Row]:
    # among rows with equal coefficient vectors only the tightest (smallest constant) matters
    best: dict[tuple, _Row] = {}
    for r in rows:
        key = tuple(sorted(r.coef.items()))
        if key not in best or r.const < best[key].const:
            best[key] = r
    return list(best.values())


def _contradiction(rows: list[_Row]):
    for r in rows:
        if not r.coef and r.const <= 0:
            return r.trace, r.const
    return None


def _pick(lo, hi) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        return Fraction(int(lo // 1) + 1)
    if lo is None:
        return Fraction(-int((-hi) // 1) - 1)
    k = Fraction(int(lo // 1) + 1)
    return k if k < hi else (lo + hi) / 2


def euclidean_region_nonempty(G: FeynmanGraph, kin: KinematicSpec | None = None):
    """Is there a parameter point making every coefficient of F positive?"""
    F = second_symanzik(G, kin)
    pts = sorted(F.support())
    forms = [F.terms[p] for p in pts]
    witness, bad = strict_feasibility(forms)
    if witness is not None:
        return Nonempty(dict(sorted(witness.items())))
    trace, const = bad
    return Empty([(pts[i], m) for i, m in sorted(trace.items()) if m], const)


def check_empty(F: ParamPoly, result: Empty) -> bool:
    """Re-derive the contradiction: the combination must be a constant <= 0."""
    acc = ParamLinearForm()
    for p, m in result.combination:
        if m < 0:
            return False
        acc = acc + F.coeff(p).scale(m)
    return acc.is_constant() and acc.constant <= 0 and bool(result.combination)


# ---------------------------------------------------------------------------
# convergence

@dataclass
class ConvergenceReport:
    condition_i: Certificate
    condition_ii: bool | None
    alpha: Fraction
    beta: Fraction
    verdict: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"condition_i": self.condition_i.status.value,
                "condition_i_N": self.condition_i.N,
                "condition_ii": self.condition_ii,
                "u_exponent": str(self.alpha), "f_exponent": str(self.beta),
                "verdict": self.verdict, "detail": self.detail}


def convergence_check(G: FeynmanGraph, kin: KinematicSpec | None, assignment: Mapping[str, object],
                      nu: Sequence, D, n_max: int = 1000) -> ConvergenceReport:
    """Sufficient condition for convergence in the Euclidean region.

    (i) F instantiated at ``assignment`` has a sparse Pólya certificate;
    (ii) ν + α·Newt(U) lies in the relative interior of β·Newt(F), with
    α = |ν| − (ℓ+1)D/2 and β = |ν| − ℓD/2.
    """
    nu = [to_fraction(x) for x in nu]
    D = to_fraction(D)
    if len(nu) != G.n_edges:
        raise ValueError("need one exponent per internal edge")
    ell = G.loops
    total = sum(nu)
    alpha = total - Fraction(ell + 1) * D / 2
    beta = total - Fraction(ell) * D / 2
    if beta <= 0:
        raise ValueError(f"F-exponent |nu| - l*D/2 = {beta} must be positive")
    f = instantiate(second_symanzik(G, kin), assignment)
    cert = sparse_polya_certify(f, SearchConfig(n_max=n_max))
    if alpha < 0:
        cond2, detail = None, f"U-exponent {alpha} is negative; condition (ii) is not supported"
    else:
        U = first_symanzik(G)
        Q = scale_polytope(newton_polytope(f), beta)
        pts = [tuple(x + alpha * Fraction(u) for x, u in zip(nu, v)) for v in newton_polytope(U).vertices]
        cond2 = relint_contains(pts, Q)
        detail = ""
    ok = cert.certified and cond2 is True
    return ConvergenceReport(cert, cond2, alpha, beta, "convergent" if ok else "not decided", detail)


def parse_assignment(data: Mapping[str, object]) -> dict[str, Fraction]:
    out = {}
    for k, v in data.items():
        if isinstance(v, float):
            raise ValueError(f"parameter {k!r}: floats are not accepted, use a string like \"897/100\"")
        out[k] = to_fraction(v)
    return out


__all__ = [
    "ParamLinearForm", "ParamPoly", "MassTag", "KinematicSpec", "FeynmanGraph", "TwoForest",
    "spanning_trees", "spanning_2forests", "first_symanzik", "second_symanzik", "generic_support",
    "instantiate", "euclidean_region_nonempty", "strict_feasibility", "check_empty", "Nonempty", "Empty",
    "convergence_check", "ConvergenceReport",
]
