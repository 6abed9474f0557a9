"""Command line front-end.

Exit codes: 0 success/certified/positive verdict, 1 refuted or empty,
2 unknown or undecided, 3 input error, 4 polytope is not a product of
simplices. Batch runs (several inputs) exit with the largest code.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .jsonio import (InputError, certificate_from_json, certificate_to_json, check_certificate, dumps,
                     format_offenders, load, parse_assignment_text, points_from_json, poly_from_json, stream_poly)
from .polya import SearchConfig, Status
from .polycore import SparsePoly, dehomogenize, format_poly

EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_INPUT, EXIT_NOT_PRODUCT = 0, 1, 2, 3, 4

_STATUS_EXIT = {
    Status.CERTIFIED: EXIT_OK,
    Status.REFUTED_NEWTON: EXIT_REFUTED,
    Status.REFUTED_WITNESS: EXIT_REFUTED,
    Status.UNKNOWN: EXIT_UNKNOWN,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are input errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _out_path(args, inp: str, suffix: str) -> str | None:
    """--out names a file for a single input and a directory for a batch."""
    if len(args.inputs) == 1:
        return args.out
    d = Path(args.out or ".")
    d.mkdir(parents=True, exist_ok=True)
    return str(d / (Path(inp).stem + suffix))


def _emit_product(args, out: str | None, inp: str, product: SparsePoly | None) -> None:
    if not args.emit_product or product is None:
        return
    target = args.emit_product if args.emit_product != "auto" else None
    if target is None or len(args.inputs) > 1:
        base = out if out and out != "-" else Path(inp).stem
        target = str(Path(base).with_suffix("")) + ".product.json"
    with open(target, "w") as fh:
        stream_poly(product, fh)


def _summary(inp: str, cert) -> str:
    parts = [f"{inp}: {cert.status.value}"]
    if cert.exponents is not None:
        parts.append("N=" + ",".join(map(str, cert.exponents)))
    if cert.product_terms is not None:
        parts.append(f"terms={cert.product_terms}")
    if cert.witness is not None:
        parts.append(cert.witness.note)
    if cert.status is Status.UNKNOWN and cert.offenders:
        parts.append("offenders: " + format_offenders(cert.offenders[:3], cert.target.names))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# certify

def _load_poly(path: str) -> SparsePoly:
    return poly_from_json(load(path))


def _dehom(f: SparsePoly, i: int | None) -> SparsePoly:
    if i is None:
        return f
    try:
        return dehomogenize(f, i)
    except (ValueError, IndexError) as exc:
        raise InputError(f"--dehomogenize: {exc}") from None


def run_certify_one(args, inp: str) -> int:
    from .polya import certify_with_multiplier, classical_polya_certify, sparse_polya_certify
    f = _load_poly(inp)
    mode = "strict_support" if args.strict_support else "nonneg"
    support = None
    if args.support:
        support = points_from_json(load(args.support))
    try:
        cfg = SearchConfig(n_max=args.nmax, mode=mode, emit_product=bool(args.emit_product), k=args.k,
                           support_A=support)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        if args.mode == "sparse":
            cert = sparse_polya_certify(f, cfg)
        elif args.mode == "classical":
            cert = classical_polya_certify(f, cfg)
        else:
            if not args.multiplier:
                raise InputError("--mode custom needs --multiplier")
            cert = certify_with_multiplier(f, _load_poly(args.multiplier), cfg)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = _out_path(args, inp, ".cert.json")
    _write(out, dumps(certificate_to_json(cert)))
    _emit_product(args, out, inp, cert.product)
    print(_summary(inp, cert), file=sys.stderr if out in (None, "-") else sys.stdout)
    return _STATUS_EXIT[cert.status]


# ---------------------------------------------------------------------------
# cox

def run_cox_one(args, inp: str) -> int:
    from .cox import CoxContext, SimplexProductRequired, cox_certify
    original = _load_poly(inp)
    f = _dehom(original, args.dehomogenize)
    try:
        ctx = CoxContext.from_poly(f)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        cert = cox_certify(f, ctx, args.variant, args.nmax, emit_product=bool(args.emit_product))
    except SimplexProductRequired as exc:
        print(f"{inp}: not a product of simplices; violated condition: {exc.condition} ({exc.detail})",
              file=sys.stderr)
        return EXIT_NOT_PRODUCT
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = _out_path(args, inp, ".cert.json")
    doc = certificate_to_json(cert, original if args.dehomogenize is not None else None, args.dehomogenize)
    _write(out, dumps(doc))
    _emit_product(args, out, inp, cert.product)
    print(_summary(inp, cert), file=sys.stderr if out in (None, "-") else sys.stdout)
    return _STATUS_EXIT[cert.status]


# ---------------------------------------------------------------------------
# polytope

def run_polytope_one(args, inp: str) -> int:
    from .geom import convex_hull, faces
    data = load(inp)
    if isinstance(data, dict) and ("terms" in data or "polynomial" in data):
        f = _dehom(poly_from_json(data), args.dehomogenize)
        pts = sorted(f.support())
    else:
        if args.dehomogenize is not None:
            raise InputError("--dehomogenize needs a polynomial input")
        pts = points_from_json(data)
    P = convex_hull(pts)
    if P.is_full_dimensional() and P.dim > 0:
        from .cox import CoxContext
        doc = CoxContext.from_polytope(P).to_json()
    else:
        doc = {"polytope": P.to_json(), "fan": None}
    doc["faces"] = [{"active": sorted(fc.active), "dim": fc.dim} for fc in faces(P)]
    out = _out_path(args, inp, ".polytope.json")
    _write(out, dumps(doc))
    if args.emit_obj:
        if P.n not in (2, 3):
            raise InputError("--emit-obj needs a 2- or 3-dimensional point set")
        target = args.emit_obj if len(args.inputs) == 1 else str(Path(args.emit_obj) / (Path(inp).stem + ".obj"))
        Path(target).parent.mkdir(parents=True, exist_ok=True)
        Path(target).write_text(polytope_obj(P))
    return EXIT_OK


def polytope_obj(P) -> str:
    """Wavefront OBJ with vertices and edges only."""
    from .geom import faces
    lines = [f"# {len(P.vertices)} vertices"]
    for v in P.vertices:
        xyz = list(v) + [0] * (3 - len(v))
        lines.append("v " + " ".join(str(x) for x in xyz))
    for fc in faces(P):
        if fc.dim == 1:
            a, b = sorted(P.vertices.index(v) + 1 for v in fc.vertices)
            lines.append(f"l {a} {b}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# symanzik

def run_symanzik_one(args, inp: str) -> int:
    from . import feynman as fy
    try:
        G = fy.FeynmanGraph.from_json(load(inp))
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from None
    out = _out_path(args, inp, ".symanzik.json")
    report: dict = {}
    code = EXIT_OK
    try:
        if args.emit == "U":
            report["U"] = {"polynomial": format_poly(fy.first_symanzik(G))}
        if args.emit == "F":
            F = fy.second_symanzik(G)
            report["F"] = F.to_json()
            report["F"]["text"] = str(F)
        if args.emit == "support":
            pts, flags = fy.generic_support(G)
            report["support"] = [{"exponent": list(p), "forest_part": fl.in_forest_part,
                                  "mass_part": fl.in_mass_part, "mass_symbol": fl.mass_symbol,
                                  "vertex": fl.vertex} for p, fl in ((p, flags[p]) for p in pts)]
        if args.check_euclidean:
            res = fy.euclidean_region_nonempty(G)
            if res.nonempty:
                report["euclidean"] = {"verdict": "Nonempty", "witness": {k: str(v) for k, v in res.witness.items()}}
            else:
                report["euclidean"] = {"verdict": "Empty", "constant": str(res.constant),
                                       "combination": [{"exponent": list(e), "multiplier": str(m)}
                                                       for e, m in res.combination]}
                code = max(code, EXIT_REFUTED)
            print(f"{inp}: Euclidean region {report['euclidean']['verdict']}")
        if args.certify or args.convergence:
            if not args.params:
                raise InputError("--certify and --convergence need --params")
            assignment = parse_assignment_text(args.params)
            if args.certify:
                from .polya import sparse_polya_certify
                f = fy.instantiate(fy.second_symanzik(G), assignment)
                cert = sparse_polya_certify(f, SearchConfig(n_max=args.nmax))
                report["certificate"] = certificate_to_json(cert)
                print(_summary(inp, cert))
                code = max(code, _STATUS_EXIT[cert.status])
            if args.convergence:
                if args.nu is None or args.dim is None:
                    raise InputError("--convergence needs --nu and --dim")
                nu = [x.strip() for x in args.nu.split(",")]
                rep = fy.convergence_check(G, None, assignment, nu, args.dim, n_max=args.nmax)
                report["convergence"] = rep.to_json()
                print(f"{inp}: convergence {rep.verdict}")
                code = max(code, EXIT_OK if rep.verdict == "convergent" else EXIT_UNKNOWN)
    except KeyError as exc:
        raise InputError(f"unresolved kinematics: {exc.args[0]}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(out, dumps(report))
    return code


# ---------------------------------------------------------------------------
# verify

def run_verify_one(args, inp: str) -> int:
    original, cert = certificate_from_json(load(inp))
    if args.input:
        given = _load_poly(args.input)
        if given != original:
            print(f"{inp}: certificate is for a different polynomial", file=sys.stderr)
            return EXIT_REFUTED
    ok, msg = check_certificate(cert.source, cert)
    print(f"{inp}: {'valid' if ok else 'INVALID'} {cert.status.value} ({msg})")
    return EXIT_OK if ok else EXIT_REFUTED


# ---------------------------------------------------------------------------

_RUNNERS: dict[str, Callable] = {
    "certify": run_certify_one,
    "cox": run_cox_one,
    "polytope": run_polytope_one,
    "symanzik": run_symanzik_one,
    "verify": run_verify_one,
}


def _guarded(cmd: str, args, inp: str) -> int:
    try:
        return _RUNNERS[cmd](args, inp)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _job(payload) -> int:
    cmd, args, inp = payload
    return _guarded(cmd, args, inp)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sparsepolya", description="Exact Pólya-type positivity certificates.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, out_help="output file (a directory for several inputs); default stdout"):
        sp.add_argument("inputs", nargs="+", metavar="INPUT")
        sp.add_argument("--out", help=out_help)
        sp.add_argument("--jobs", type=int, default=1, help="parallel workers for several inputs")

    c = sub.add_parser("certify", help="Pólya search with a support, classical or custom multiplier")
    common(c)
    c.add_argument("--mode", choices=("sparse", "classical", "custom"), default="sparse")
    c.add_argument("--multiplier", help="polynomial JSON for --mode custom")
    c.add_argument("--support", help="point-set JSON for the multiplier support (sparse mode)")
    c.add_argument("--k", type=int, default=1, help="supp(f) lies in k*A")
    c.add_argument("--nmax", type=int, default=64)
    c.add_argument("--strict-support", action="store_true")
    c.add_argument("--emit-product", nargs="?", const="auto", metavar="PATH")

    x = sub.add_parser("cox", help="Cox-coordinate search for products of simplices")
    common(x)
    x.add_argument("--variant", choices=("primitive", "irrelevant"), default="irrelevant")
    x.add_argument("--nmax", type=int, default=64)
    x.add_argument("--dehomogenize", type=int, metavar="I", help="set variable I (from 1) to 1 first")
    x.add_argument("--emit-product", nargs="?", const="auto", metavar="PATH")

    t = sub.add_parser("polytope", help="facets, fan and faces of a Newton polytope or point set")
    common(t)
    t.add_argument("--dehomogenize", type=int, metavar="I")
    t.add_argument("--emit-obj", metavar="PATH", help="vertex-edge OBJ dump (2D/3D)")

    s = sub.add_parser("symanzik", help="Symanzik polynomials of a Feynman graph")
    common(s)
    s.add_argument("--emit", choices=("U", "F", "support"))
    s.add_argument("--check-euclidean", action="store_true")
    s.add_argument("--certify", action="store_true")
    s.add_argument("--params", help="parameter values: JSON file, JSON text or {m:1, s:897/100}")
    s.add_argument("--nmax", type=int, default=1000)
    s.add_argument("--convergence", action="store_true")
    s.add_argument("--nu", help="comma-separated edge exponents")
    s.add_argument("--dim", help="spacetime dimension D")

    v = sub.add_parser("verify", help="recheck a certificate file")
    common(v)
    v.add_argument("--input", help="polynomial JSON the certificate must refer to")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "nmax", 0) < 0:
        print("error: --nmax must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    cmd = args.command
    if len(args.inputs) > 1 and args.out == "-":
        print("error: several inputs need an output directory", file=sys.stderr)
        return EXIT_INPUT
    if args.jobs > 1 and len(args.inputs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            codes = list(ex.map(_job, [(cmd, args, i) for i in args.inputs]))
    else:
        codes = [_guarded(cmd, args, i) for i in args.inputs]
    return max(codes)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
