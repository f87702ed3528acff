"""Command-line entry point ``akzeta``."""

from __future__ import annotations

import argparse
import json
import sys

from .classical import poly_bernoulli_B, poly_bernoulli_C
from .exact import GaussianRational, _norm
from .gl2 import DomainError, gl2_value
from .moebius import Matrix2, classify


def _rational_json(q) -> dict:
    q = _norm(q)
    num, den = (q.numerator, q.denominator) if not isinstance(q, int) else (q, 1)
    return {"num": num, "den": den}


def _complex_arg(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


def _format_complex(z: complex) -> str:
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r} i"


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_classify(args) -> int:
    _emit(classify(Matrix2.parse(args.matrix)))
    return 0


def cmd_compute(args) -> int:
    if args.family == "classical":
        fn = poly_bernoulli_B if args.kind == "B" else poly_bernoulli_C
        value = fn(args.n, args.k)
        if args.json:
            _emit({"kind": args.kind, "n": args.n, "k": args.k, "value": _rational_json(value)})
        else:
            print(value)
        return 0

    g = Matrix2.parse(args.matrix)
    y = GaussianRational.parse(args.y) if args.y is not None else None
    w = GaussianRational.parse(args.w) if args.w is not None else None
    try:
        value = gl2_value(g, args.u, args.m, y, w)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit({"matrix": str(g), "u": args.u, "m": args.m, "value": value.to_json(), "text": str(value)})
    else:
        print(value)
    return 0


def cmd_zeta(args) -> int:
    from .numeric import ZetaDomainError, xi_D_at_neg_int, xi_D_hankel, xi_D_numeric

    g = Matrix2.parse(args.matrix)
    u, s, y, w = (_complex_arg(v) for v in (args.u, args.s, args.y, args.w))
    method = args.method
    s_is_neg_int = s.imag == 0 and s.real <= 0 and float(s.real).is_integer()
    if method == "auto":
        method = "circle" if s_is_neg_int else ("integral" if s.real > 0 else "hankel")
    try:
        if method == "circle":
            if not s_is_neg_int:
                raise ZetaDomainError("the circle method needs s to be a nonpositive integer")
            ev = xi_D_at_neg_int(u, int(-s.real), y, w, g)
        elif method == "hankel":
            ev = xi_D_hankel(u, s, y, w, g)
        else:
            ev = xi_D_numeric(u, s, y, w, g)
    except ZetaDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        point = {name: _format_complex(v) for name, v in zip("usyw", (u, s, y, w))}
        _emit({"matrix": str(g), **point, **ev.to_dict()})
    else:
        print(f"{_format_complex(complex(ev.value))} ± {ev.est_error:.3e}")
    return 0


def cmd_verify(args) -> int:
    from .identities import CORPUS, CatalogConfig, run_catalog

    matrices = None
    if args.matrix:
        matrices = {}
        for text in args.matrix:
            g = CORPUS.get(text) or Matrix2.parse(text)
            matrices[text] = g
    cfg = CatalogConfig(
        max_order=args.max_order,
        matrices=matrices,
        cases=args.case or None,
        include_numeric=not args.exact_only,
        numeric_points=args.points,
    )
    report = run_catalog(cfg)
    print(report.to_csv() if args.format == "csv" else report.to_json(), end="" if args.format == "csv" else "\n")
    if not report.cases:
        print("error: no case matched the selection", file=sys.stderr)
        return 1
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akzeta", description="GL2 poly-Bernoulli numbers and zeta integrals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="vertex, cusp and admissibility data of a matrix")
    p.add_argument("--matrix", required=True, help='entries as "a,b;c,d"')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compute", help="exact poly-Bernoulli values")
    fam = p.add_subparsers(dest="family", required=True)
    c = fam.add_parser("classical", help="B_n^(k) or C_n^(k)")
    c.add_argument("--kind", choices=["B", "C"], required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)
    c = fam.add_parser("gl2", help="B_m^(u)(y, w; g) as a number or a polynomial")
    c.add_argument("--matrix", required=True)
    c.add_argument("--u", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--y")
    c.add_argument("--w")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    p = sub.add_parser("zeta", help="numeric value of the zeta integral")
    p.add_argument("--matrix", required=True)
    for name in ("u", "s", "y", "w"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--method", choices=["auto", "integral", "hankel", "circle"], default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("verify", help="run the identity catalog")
    p.add_argument("--case", action="append", help="case-id prefix; repeatable")
    p.add_argument("--matrix", action="append", help="corpus name or \"a,b;c,d\"; repeatable")
    p.add_argument("--max-order", type=int, default=5)
    p.add_argument("--points", type=int, default=20, help="random points per matrix in the numeric suite")
    p.add_argument("--exact-only", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify)
    return parser


_VALUE_OPTIONS = {"--matrix", "--u", "--s", "--y", "--w", "--k", "--n", "--m"}


def _attach_values(argv: list[str]) -> list[str]:
    # "--matrix -1,1;0,1" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_values(argv))
    try:
        return args.func(args)
    except BrokenPipeError:
        # output piped into e.g. head; stop quietly
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
