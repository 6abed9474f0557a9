"""JSON formats for polynomials, point sets, graphs and certificates.

Numbers are read exactly: JSON decimals become Fractions through their
decimal text, and strings such as ``"-19/10"`` are accepted wherever a
coefficient is expected.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, TextIO

from .polya import Certificate, Status, Witness, product_of
from .polycore import SparsePoly, dehomogenize, format_poly, parse_poly, to_fraction

SCHEMA = "sparsepolya-certificate"
SCHEMA_VERSION = 1
OFFENDER_CAP = 50


class InputError(ValueError):
    """Malformed or inconsistent user input (exit code 3)."""


# ---------------------------------------------------------------------------
# reading

def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc.strerror}") from None
    return loads(text, str(p))


def _coef(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"{where}: boolean is not a coefficient")
    try:
        return to_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: bad coefficient {x!r} ({exc})") from None


def _int_list(x, where: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise InputError(f"{where}: expected a list of integers")
    if length is not None and len(x) != length:
        raise InputError(f"{where}: expected {length} entries, got {len(x)}")
    return tuple(x)


def poly_from_json(data: Any) -> SparsePoly:
    """{"variables": [...], "terms": [{"exponent": [...], "coefficient": "p/q"}, ...]}
    or {"variables": [...], "polynomial": "t1^2 - 3/2*t1*t2"}."""
    if not isinstance(data, dict):
        raise InputError("polynomial JSON must be an object")
    names = data.get("variables")
    n = data.get("n")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(v, str) for v in names) or len(set(names)) != len(names):
            raise InputError("variables must be a list of distinct names")
        if n is not None and n != len(names):
            raise InputError("n disagrees with the variable list")
        n = len(names)
    if "polynomial" in data:
        if names is None:
            raise InputError("a polynomial string needs a variable list")
        try:
            return parse_poly(str(data["polynomial"]), names)
        except ValueError as exc:
            raise InputError(f"polynomial: {exc}") from None
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise InputError("polynomial JSON needs 'terms' or 'polynomial'")
    if n is None:
        if not terms:
            raise InputError("cannot infer the number of variables")
        first = terms[0].get("exponent") if isinstance(terms[0], dict) else None
        n = len(first) if isinstance(first, list) else 0
    acc: dict[tuple[int, ...], Fraction] = {}
    for k, t in enumerate(terms):
        if not isinstance(t, dict):
            raise InputError(f"term {k + 1}: expected an object")
        e = _int_list(t.get("exponent"), f"term {k + 1} exponent", n)
        acc[e] = acc.get(e, Fraction(0)) + _coef(t.get("coefficient"), f"term {k + 1}")
    return SparsePoly(n, acc, names)


def points_from_json(data: Any) -> list[tuple[int, ...]]:
    pts = data.get("points") if isinstance(data, dict) else data
    if not isinstance(pts, list) or not pts:
        raise InputError("point set must be a nonempty list of integer vectors")
    out = [_int_list(p, f"point {k + 1}") for k, p in enumerate(pts)]
    if len({len(p) for p in out}) != 1:
        raise InputError("points have different dimensions")
    return out


def parse_assignment_text(text: str) -> dict[str, Fraction]:
    """Parameter values from a JSON file, JSON text, or the loose form ``{m:1, s:897/100}``."""
    p = Path(text)
    if p.suffix == ".json" or (len(text) < 4096 and p.is_file()):
        data = load(p)
    else:
        stripped = text.strip()
        try:
            data = json.loads(stripped, parse_float=Fraction)
        except json.JSONDecodeError:
            body = stripped.strip("{}")
            data = {}
            for part in filter(None, (s.strip() for s in body.split(","))):
                if ":" not in part:
                    raise InputError(f"bad parameter entry {part!r}; expected name:value")
                k, v = part.split(":", 1)
                data[k.strip().strip("'\"")] = v.strip().strip("'\"")
    if not isinstance(data, dict):
        raise InputError("parameters must be an object")
    return {str(k): _coef(v, f"parameter {k}") for k, v in data.items()}


# ---------------------------------------------------------------------------
# writing

def _fstr(c: Fraction) -> str:
    return str(Fraction(c))


def poly_to_json(f: SparsePoly) -> dict:
    return {
        "n": f.n,
        "variables": list(f.names),
        "terms": [{"exponent": list(e), "coefficient": _fstr(c)} for e, c in f.items()],
    }


def canonical_hash(f: SparsePoly) -> str:
    # names do not affect equality, so they stay out of the hash
    body = {"n": f.n, "terms": [[list(e), _fstr(c)] for e, c in f.items()]}
    return hashlib.sha256(json.dumps(body, separators=(",", ":")).encode()).hexdigest()


def dumps(obj: Any) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    return _render(json.loads(json.dumps(obj, default=_default)), "") + "\n"


def _render(o: Any, pad: str) -> str:
    inner = pad + "  "
    if isinstance(o, dict):
        if not o:
            return "{}"
        flat = all(not isinstance(v, dict) and not (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v))
                   for v in o.values())
        one = json.dumps(o)
        if flat and len(one) + len(pad) <= 100:
            return one
        body = ",\n".join(f"{inner}{json.dumps(k)}: {_render(v, inner)}" for k, v in o.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(o, list):
        if all(not isinstance(v, (dict, list)) for v in o):
            return json.dumps(o)
        return "[\n" + ",\n".join(inner + _render(v, inner) for v in o) + "\n" + pad + "]"
    return json.dumps(o)


def _default(o):
    if isinstance(o, Fraction):
        return _fstr(o)
    if isinstance(o, (frozenset, set)):
        return sorted(o)
    if hasattr(o, "to_json"):
        return o.to_json()
    raise TypeError(f"not serializable: {type(o).__name__}")


def stream_poly(f: SparsePoly, out: TextIO) -> None:
    """Write a polynomial as JSON, one term per line, in canonical order."""
    out.write('{\n  "n": %d,\n  "variables": %s,\n  "terms": [\n' % (f.n, json.dumps(list(f.names))))
    first = True
    for e, c in f.items():
        out.write(("" if first else ",\n") + '    {"exponent": %s, "coefficient": "%s"}' % (json.dumps(list(e)), _fstr(c)))
        first = False
    out.write("\n  ]\n}\n")


def _offenders_json(offs) -> list:
    return [{"exponent": list(e), "coefficient": _fstr(c)} for e, c in offs[:OFFENDER_CAP]]


def certificate_to_json(cert: Certificate, original: SparsePoly | None = None, dehom: int | None = None) -> dict:
    src = original if original is not None else cert.source
    out: dict[str, Any] = {
        "schema": SCHEMA,
        "schema_version": SCHEMA_VERSION,
        "status": cert.status.value,
        "kind": cert.kind,
        "mode": cert.mode,
        "input": poly_to_json(src),
        "input_sha256": canonical_hash(src),
    }
    if dehom is not None:
        out["dehomogenize"] = dehom
    out["exponents"] = None if cert.exponents is None else list(cert.exponents)
    out["product_terms"] = cert.product_terms
    out["multipliers"] = [poly_to_json(g) for g in cert.multipliers]
    if cert.support_A is not None:
        out["support_A"] = [list(a) for a in cert.support_A]
        out["k"] = cert.k
    out["newton_guard"] = cert.newton_guard
    if cert.cox is not None:
        out["cox"] = cert.cox
    out["offender_count"] = len(cert.offenders)
    out["offenders"] = _offenders_json(cert.offenders)
    if cert.witness is not None:
        w = cert.witness
        out["witness"] = {"face": list(w.face), "point": [_fstr(x) for x in w.point],
                          "value": _fstr(w.value), "note": w.note}
    out["history"] = [{"exponents": list(ex), "offenders": _offenders_json(offs)} for ex, offs in cert.history]
    return out


def certificate_from_json(data: Any) -> tuple[SparsePoly, Certificate]:
    """Rebuild (input polynomial, certificate); the target is recomputed, never trusted."""
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise InputError("not a certificate file")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise InputError(f"unsupported schema version {data.get('schema_version')!r}")
    original = poly_from_json(data.get("input"))
    if canonical_hash(original) != data.get("input_sha256"):
        raise InputError("input hash does not match the embedded polynomial")
    f = original
    if data.get("dehomogenize") is not None:
        f = dehomogenize(original, int(data["dehomogenize"]))
    try:
        status = Status(data["status"])
    except (KeyError, ValueError):
        raise InputError(f"unknown status {data.get('status')!r}") from None
    kind = data.get("kind")
    mults = [poly_from_json(g) for g in data.get("multipliers", [])]
    exps = data.get("exponents")
    cox = data.get("cox")
    target = f
    if isinstance(kind, str) and kind.startswith("cox") and status is not Status.REFUTED_NEWTON:
        from .cox import recompute_cox_target
        probe = Certificate(status, kind, mults, None, None, [], data.get("mode", "nonneg"), f, f, cox=cox)
        try:
            target = recompute_cox_target(f, probe)
        except ValueError as exc:
            raise InputError(f"certificate facet data: {exc}") from None
    witness = None
    if data.get("witness") is not None:
        w = data["witness"]
        witness = Witness(tuple(w.get("face", [])), tuple(Fraction(x) for x in w.get("point", [])),
                          Fraction(w.get("value", "0")), w.get("note", ""))
    offs = [(tuple(o["exponent"]), Fraction(o["coefficient"])) for o in data.get("offenders", [])]
    cert = Certificate(
        status=status, kind=kind, multipliers=mults,
        exponents=None if exps is None else tuple(int(x) for x in exps),
        product_terms=data.get("product_terms"), offenders=offs, mode=data.get("mode", "nonneg"),
        target=target, source=f, witness=witness, k=int(data.get("k", 1)),
        support_A=None if data.get("support_A") is None else tuple(tuple(a) for a in data["support_A"]),
        newton_guard=bool(data.get("newton_guard", True)), cox=cox,
        offender_count=data.get("offender_count", len(offs)),
    )
    return original, cert


def check_certificate(f: SparsePoly, cert: Certificate) -> tuple[bool, str]:
    """Re-derive any certificate's claim. Certified: full product check. Refuted: the
    witness still refutes. Unknown: the recorded offenders are reproduced."""
    from .polya import newton_guard, verify_certificate
    if cert.status is Status.CERTIFIED:
        ok = verify_certificate(f, cert)
        return ok, "product recomputed; all checks pass" if ok else "product check failed"
    if cert.status is Status.REFUTED_NEWTON:
        if cert.kind in ("sparse", "classical"):
            bad = newton_guard(f, list(cert.support_A or ()), cert.k)
            return bad is not None, "Newton polytope mismatch confirmed" if bad is not None else "guard passes"
        return cert.witness is not None, "Newton polytope mismatch recorded"
    if cert.status is Status.REFUTED_WITNESS:
        w = cert.witness
        if w is None:
            return False, "missing witness"
        from .polycore import evaluate, truncate
        from .geom import newton_polytope
        P = newton_polytope(f)
        face = [a for a in f.support() if all(P.slack(i, a) == 0 for i in w.face)]
        val = evaluate(truncate(f, face), w.point) if face else Fraction(0)
        return val == w.value and val <= 0, f"face value {val}"
    # Unknown: the product at the reported exponents still has the recorded offenders
    state = product_of(cert.target, cert.multipliers, cert.exponents or ())
    actual = dict(state.offenders(cert.mode))
    count = cert.offender_count if cert.offender_count is not None else len(cert.offenders)
    ok = bool(actual) and len(actual) == count and all(actual.get(e) == c for e, c in cert.offenders)
    return ok, f"{len(actual)} offenders reproduced" if ok else "offenders differ"


def format_offenders(offs: Iterable, names) -> str:
    parts = []
    for e, c in offs:
        mono = SparsePoly(len(e), {tuple(e): c}, names)
        parts.append(format_poly(mono))
    return ", ".join(parts)


__all__ = ["InputError", "loads", "load", "poly_from_json", "poly_to_json", "points_from_json",
           "certificate_to_json", "certificate_from_json", "check_certificate", "canonical_hash",
           "stream_poly", "dumps", "parse_assignment_text"]
