"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 certification failure
(including an exhausted node search).  These are part of the contract so
the tool can anchor shell pipelines and CI checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import serialize, svg
from .errors import KnotforgeError
from .exactpoly import Poly, parse_rat, rat_str
from .knots import build_cn, synthesize
from .pade import pade
from .serialize import SchemaError
from .stieltjes import phi

USAGE_EXIT = 1
CERT_EXIT = 2


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="knotforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="synthesize a certified curve", parents=[], add_help=True)
    gen.add_argument("--n", type=int, required=True, metavar="N", help="odd number of crossings")
    gen.add_argument("--epsilon", metavar="p/q", help="starting node scale (default 1/4)")
    gen.add_argument("--nodes", metavar="LIST", help="comma-separated explicit nodes, e.g. 1/16,1/8")
    gen.add_argument("--out", metavar="FILE", help="output path (default: stdout)")
    gen.add_argument("--format", default="json", choices=["json"], help="output format")

    ver = sub.add_parser("verify", help="re-derive every certificate of a stored curve")
    ver.add_argument("file", help="curve JSON file")

    table = sub.add_parser("cn-table", help="print the odd basis C_0..C_max")
    table.add_argument("--max", type=int, default=5, metavar="K")

    phi_cmd = sub.add_parser("phi", help="print exact series coefficients")
    phi_cmd.add_argument("--count", type=int, required=True, metavar="K")

    pade_cmd = sub.add_parser("pade", help="print the [k/l] approximant of the series")
    pade_cmd.add_argument("--k", type=int, required=True, help="numerator degree")
    pade_cmd.add_argument("--l", type=int, required=True, help="denominator degree")

    exp = sub.add_parser("export", help="render a stored curve")
    fmt = exp.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--svg", action="store_true", help="plane projection with crossing gaps")
    fmt.add_argument("--csv", action="store_true", help="sampled t,x,y,z rows")
    exp.add_argument("--samples", type=int, default=1200, metavar="M")
    exp.add_argument("file", help="curve JSON file")
    exp.add_argument("--out", metavar="FILE", help="output path (default: stdout)")
    return parser


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    if args.n < 1 or args.n % 2 == 0:
        print(f"knotforge gen: error: --n must be an odd positive integer, got {args.n}",
              file=sys.stderr)
        return USAGE_EXIT
    nodes = None
    if args.nodes:
        try:
            nodes = [parse_rat(part) for part in args.nodes.split(",")]
        except ValueError as exc:
            print(f"knotforge gen: error: bad --nodes: {exc}", file=sys.stderr)
            return USAGE_EXIT
    epsilon = None
    if args.epsilon:
        try:
            epsilon = parse_rat(args.epsilon)
        except ValueError as exc:
            print(f"knotforge gen: error: bad --epsilon: {exc}", file=sys.stderr)
            return USAGE_EXIT
    try:
        curve, report = synthesize(args.n, epsilon=epsilon, nodes=nodes)
    except KnotforgeError as exc:
        print(f"knotforge gen: certification failed: {exc}", file=sys.stderr)
        return CERT_EXIT
    except ValueError as exc:
        print(f"knotforge gen: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    doc = serialize.curve_to_dict(args.n, curve.plane.x, curve.plane.y, curve.z, report, True)
    _write(serialize.dumps(doc), args.out)
    degs = (3, curve.plane.y.degree, curve.z.degree)
    print(f"N={args.n}: certified curve of degree {degs}, "
          f"epsilon={rat_str(report.epsilon) if report.epsilon is not None else 'n/a'}",
          file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    try:
        doc = serialize.load_curve(args.file)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"knotforge verify: cannot read {args.file}: {exc}", file=sys.stderr)
        return USAGE_EXIT
    try:
        ok, lines = serialize.verify_curve(doc)
    except SchemaError as exc:
        print(f"knotforge verify: bad schema: {exc}", file=sys.stderr)
        return USAGE_EXIT
    for line in lines:
        print(line)
    print("VERIFIED" if ok else "NOT VERIFIED")
    return 0 if ok else CERT_EXIT


def _cmd_cn_table(args) -> int:
    if args.max < 0:
        print("knotforge cn-table: error: --max must be >= 0", file=sys.stderr)
        return USAGE_EXIT
    basis = build_cn(args.max)
    for j, (c, coords) in enumerate(zip(basis.cn, basis.cn_w)):
        order = 2 * j + 1
        cofactor = str(Poly(c.coeffs[order:]))
        mono = f"t^{order}" if order > 1 else "t"
        if cofactor != "1":
            mono += f" * ({cofactor})"
        wparts = []
        for i in range(j, -1, -1):
            coeff = coords[i]
            if coeff == 0:
                continue
            mag = coeff if coeff > 0 else -coeff
            body = f"W_{i}" if mag == 1 else f"{rat_str(mag)}*W_{i}"
            if not wparts:
                wparts.append(body if coeff > 0 else f"-{body}")
            else:
                wparts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        print(f"C_{j} = {mono} = {' '.join(wparts)}")
    return 0


def _cmd_phi(args) -> int:
    if args.count < 1:
        print("knotforge phi: error: --count must be >= 1", file=sys.stderr)
        return USAGE_EXIT
    for n in range(1, args.count + 1):
        print(rat_str(phi(n)))
    return 0


def _cmd_pade(args) -> int:
    if args.k < 0 or args.l < 0 or args.l > args.k:
        print("knotforge pade: error: need 0 <= l <= k", file=sys.stderr)
        return USAGE_EXIT
    approx = pade(phi, args.k, args.l)
    print("P:", " ".join(rat_str(approx.p.coeff(i)) for i in range(args.k + 1)))
    print("Q:", " ".join(rat_str(approx.q.coeff(i)) for i in range(args.l + 1)))
    return 0


def _cmd_export(args) -> int:
    if args.samples < 2:
        print("knotforge export: error: --samples must be >= 2", file=sys.stderr)
        return USAGE_EXIT
    try:
        doc = serialize.load_curve(args.file)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"knotforge export: cannot read {args.file}: {exc}", file=sys.stderr)
        return USAGE_EXIT
    try:
        text = svg.render_svg(doc, args.samples) if args.svg else svg.render_csv(doc, args.samples)
    except (SchemaError, KeyError) as exc:
        print(f"knotforge export: bad curve file: {exc}", file=sys.stderr)
        return USAGE_EXIT
    _write(text, args.out)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "cn-table": _cmd_cn_table,
    "phi": _cmd_phi,
    "pade": _cmd_pade,
    "export": _cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse help/usage paths; exit code already decided
        return int(exc.code) if exc.code is not None else 0
    return _COMMANDS[args.command](args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
