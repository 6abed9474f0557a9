"""Exact sparse Laurent polynomials with rational coefficients.

A :class:`SparsePoly` maps integer exponent vectors to :class:`Fraction`
coefficients. Values are immutable; every operation returns a new
polynomial. Terms are kept in graded reverse lexicographic order
whenever they are enumerated, so serialization is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


def to_fraction(value) -> Fraction:
    """Exact rational from int, Fraction, or a string like "3", "-7/2", "1.9".

    Floats are refused: a float has already lost the digits the user typed.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("float coefficients are not accepted; pass a decimal string")
    if isinstance(value, str):
        s = value.strip()
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot read {type(value).__name__} as a rational")


def grevlex_key(a: Exponent):
    """Sort key; larger key means larger in graded reverse lex order."""
    return (sum(a), tuple(-x for x in reversed(a)))


class SparsePoly:
    """Laurent polynomial in ``n`` variables with exact rational coefficients."""

    __slots__ = ("_n", "_terms", "_names", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | Iterable = (), names: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("ambient dimension must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, coef in items:
            e = tuple(int(x) for x in exp)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            c = to_fraction(coef)
            acc[e] = acc.get(e, Fraction(0)) + c
        self._n = n
        self._terms = {e: c for e, c in acc.items() if c != 0}
        if names is not None and len(names) != n:
            raise ValueError("names must match the ambient dimension")
        self._names = tuple(names) if names is not None else None
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, Fraction], names=None) -> "SparsePoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj._n = n
        obj._terms = terms
        obj._names = names
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "SparsePoly":
        return cls._raw(n, {(0,) * n: Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef=1) -> "SparsePoly":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]], n: int | None = None) -> "SparsePoly":
        """Sum of t^a over the given points, all coefficients one."""
        pts = [tuple(p) for p in points]
        if n is None:
            if not pts:
                raise ValueError("cannot infer dimension of an empty point set")
            n = len(pts[0])
        return cls(n, {p: 1 for p in set(pts)})

    # basic accessors
    @property
    def n(self) -> int:
        return self._n

    @property
    def names(self) -> tuple[str, ...]:
        return self._names or tuple(f"t{i + 1}" for i in range(self._n))

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def with_names(self, names: Sequence[str] | None) -> "SparsePoly":
        if names is not None and len(names) != self._n:
            raise ValueError("names must match the ambient dimension")
        return SparsePoly._raw(self._n, self._terms, tuple(names) if names else None)

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical order (leading grevlex term first)."""
        return sorted(self._terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(e for e, _ in self.items())

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def total_degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return next(iter(degs))

    # arithmetic
    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "SparsePoly") -> None:
        if self._n != other._n:
            raise ValueError(f"dimension mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return SparsePoly._raw(self._n, acc, self._names)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self._n, {e: -c for e, c in self._terms.items()}, self._names)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            return mul(self, other)
        c = to_fraction(other)
        if c == 0:
            return SparsePoly.zero(self._n)
        return SparsePoly._raw(self._n, {e: v * c for e, v in self._terms.items()}, self._names)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = SparsePoly.one(self._n)
        base = self
        while k:
            if k & 1:
                out = mul(out, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return out

    def __repr__(self) -> str:
        return f"SparsePoly({self._n}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Exact product; cancelled terms are dropped."""
    f._check(g)
    if len(f) < len(g):
        f, g = g, f
    acc: dict[Exponent, Fraction] = {}
    gitems = list(g._terms.items())
    n = f._n
    for a, ca in f._terms.items():
        for b, cb in gitems:
            e = tuple(a[i] + b[i] for i in range(n))
            acc[e] = acc.get(e, 0) + ca * cb
    return SparsePoly._raw(n, {e: c for e, c in acc.items() if c != 0}, f._names or g._names)


def power_multiply(f: SparsePoly, g: SparsePoly, N: int) -> Iterator[SparsePoly]:
    """Yield g^0·f, g^1·f, ..., g^N·f, one multiplication per step."""
    f._check(g)
    if N < 0:
        raise ValueError("N must be nonnegative")
    cur = f
    yield cur
    for _ in range(N):
        cur = mul(cur, g)
        yield cur


def truncate(f: SparsePoly, S: Iterable[Sequence[int]]) -> SparsePoly:
    keep = {tuple(s) for s in S}
    return SparsePoly._raw(f.n, {e: c for e, c in f._terms.items() if e in keep}, f._names)


def initial_form(f: SparsePoly, w: Sequence) -> SparsePoly:
    """Terms of f minimizing w·a."""
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial")
    if len(w) != f.n:
        raise ValueError("weight length does not match dimension")
    wf = [to_fraction(x) if not isinstance(x, (int, Fraction)) else x for x in w]
    vals = {e: sum(wi * ei for wi, ei in zip(wf, e)) for e in f._terms}
    m = min(vals.values())
    return SparsePoly._raw(f.n, {e: c for e, c in f._terms.items() if vals[e] == m}, f._names)


def substitute_monomial_map(f: SparsePoly, M: Sequence[Sequence[int]], shift: Sequence[int] | None = None,
                            names: Sequence[str] | None = None) -> SparsePoly:
    """Replace each c·t^a by c·x^(M a + shift); M is r×n."""
    r = len(M)
    if any(len(row) != f.n for row in M):
        raise ValueError(f"matrix must have {f.n} columns")
    sh = tuple(shift) if shift is not None else (0,) * r
    if len(sh) != r:
        raise ValueError("shift length must equal the number of matrix rows")
    acc: dict[Exponent, Fraction] = {}
    for a, c in f._terms.items():
        e = tuple(sum(row[j] * a[j] for j in range(f.n)) + sh[i] for i, row in enumerate(M))
        acc[e] = acc.get(e, 0) + c
    return SparsePoly._raw(r, {e: c for e, c in acc.items() if c != 0}, tuple(names) if names else None)


def dehomogenize(f: SparsePoly, i: int) -> SparsePoly:
    """Set t_i = 1 (1-based index)."""
    if not 1 <= i <= f.n:
        raise IndexError(f"variable index {i} out of range 1..{f.n}")
    k = i - 1
    acc: dict[Exponent, Fraction] = {}
    for a, c in f._terms.items():
        e = a[:k] + a[k + 1:]
        acc[e] = acc.get(e, 0) + c
    names = f._names[:k] + f._names[k + 1:] if f._names else None
    return SparsePoly._raw(f.n - 1, {e: c for e, c in acc.items() if c != 0}, names)


def evaluate(f: SparsePoly, point: Sequence, allow_zero: bool = False) -> Fraction:
    """Exact value at a point of the positive orthant.

    ``allow_zero`` permits zero coordinates for variables that only occur
    with nonnegative exponents (used when restricting Cox polynomials to
    coordinate subspaces).
    """
    if len(point) != f.n:
        raise ValueError("point dimension mismatch")
    p = [to_fraction(x) for x in point]
    for i, x in enumerate(p):
        if x < 0 or (x == 0 and not allow_zero):
            raise ValueError(f"coordinate {i + 1} is not positive: {x}")
    total = Fraction(0)
    for a, c in f._terms.items():
        term = c
        for x, e in zip(p, a):
            if e:
                if x == 0:
                    if e < 0:
                        raise ValueError("negative exponent at a zero coordinate")
                    term = Fraction(0)
                    break
                term *= x ** e
        total += term
    return total


@dataclass(frozen=True)
class CoefficientReport:
    all_nonnegative: bool
    all_positive_on_required: bool
    offenders: tuple[tuple[Exponent, Fraction], ...]


def coefficient_report(f: SparsePoly, required_support: Iterable[Sequence[int]] | None = None) -> CoefficientReport:
    """Sign summary of the coefficients.

    Offenders are the negative terms plus, when a required support is
    given, the required points whose coefficient is not positive.
    """
    bad = {e: c for e, c in f._terms.items() if c < 0}
    nonneg = not bad
    if required_support is None:
        pos = all(c > 0 for c in f._terms.values())
    else:
        pos = True
        for s in required_support:
            e = tuple(s)
            c = f._terms.get(e, Fraction(0))
            if c <= 0:
                pos = False
                bad[e] = c
        pos = pos and nonneg
    offenders = tuple(sorted(bad.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True))
    return CoefficientReport(nonneg, pos, offenders)


# text form ---------------------------------------------------------------

def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: SparsePoly) -> str:
    if f.is_zero():
        return "0"
    names = f.names
    parts = []
    for e, c in f.items():
        mon = "*".join(
            names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x != 0
        )
        mag = abs(c)
        sign = "-" if c < 0 else "+"
        if not mon:
            body = _fmt_coef(mag)
        elif mag == 1:
            body = mon
        else:
            body = f"{_fmt_coef(mag)}*{mon}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:/\d+)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


def parse_poly(text: str, names: Sequence[str]) -> SparsePoly:
    """Read a sum of monomials such as ``"t4^3 - 1.9*t2*t4^2 + t1^-1"``.

    Only sums of products of a coefficient and powers of the named
    variables are accepted; there is no expansion of parentheses.
    """
    index = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos}: {text[pos]!r}")
        tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    terms: dict[Exponent, Fraction] = {}
    i = 0

    def expect_int() -> int:
        nonlocal i
        sign = 1
        if i < len(tokens) and tokens[i] == ("op", "-"):
            sign = -1
            i += 1
        if i >= len(tokens) or tokens[i][0] != "num" or not tokens[i][1].isdigit():
            raise ValueError("expected an integer exponent")
        v = int(tokens[i][1])
        i += 1
        return sign * v

    if not tokens:
        raise ValueError("empty polynomial text")
    while i < len(tokens):
        sign = Fraction(1)
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        coef = sign
        exp = [0] * n
        first = True
        while True:
            if i >= len(tokens):
                if first:
                    raise ValueError("dangling sign")
                break
            kind, val = tokens[i]
            if not first:
                if (kind, val) != ("op", "*"):
                    break
                i += 1
                kind, val = tokens[i]
            first = False
            i += 1
            if kind == "num":
                coef *= Fraction(val)
            elif kind == "name":
                if val not in index:
                    raise ValueError(f"unknown variable {val!r}")
                power = 1
                if i < len(tokens) and tokens[i] == ("op", "^"):
                    i += 1
                    power = expect_int()
                exp[index[val]] += power
            else:
                raise ValueError(f"unexpected {val!r}")
        e = tuple(exp)
        terms[e] = terms.get(e, Fraction(0)) + coef
    return SparsePoly(n, terms, names)
