"""Command-line interface: ``chiratio {constants,converge,extend,fold,render,verify}``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .approx import eval_decimal
from .constants import chi, chi_prime, named_constants, phi
from .exact import format_exact, is_exact, to_json
from .folding import fold_cf, fold_golden_from, fold_harmonic
from .identities import run_identities
from .rectangles import extend_ratio, extend_sequence, extend_sequence_json, subdivide
from .render import Style, render_construction, render_extend_sequence, render_fold_trace, render_subdivision
from .sequences import (
    CFConfig,
    RadicalConfig,
    cf_convergents,
    fibonacci_ratios,
    h_sequence,
    nested_radical,
)

SYMBOLS = {"phi": phi, "chi": chi, "chi_prime": chi_prime}


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_number(token: str):
    """Integer, fraction ``p/q``, decimal, or one of phi, chi, chi_prime."""
    t = token.strip()
    if t in SYMBOLS:
        return SYMBOLS[t]()
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid number: {token!r}") from None


def parse_rational(token: str) -> Fraction:
    x = parse_number(token)
    if not isinstance(x, Fraction):
        raise UsageError(f"expected a rational number, got {token!r}")
    return x


def parse_int(token: str) -> int:
    x = parse_rational(token)
    if x.denominator != 1:
        raise UsageError(f"expected an integer, got {token!r}")
    return int(x)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _exact_or_null(x):
    return to_json(x) if is_exact(x) else None


def cmd_constants(args, out) -> int:
    consts = named_constants()
    if args.json:
        out.write(dumps([c.to_json() for c in consts]) + "\n")
        return 0
    for c in consts:
        digits = min(args.digits, 10) if not c.exact else args.digits
        out.write(f"{c.name} {c.decimal(digits)}\n")
    return 0


def cmd_converge(args, out) -> int:
    count = parse_int(args.count)
    digits = args.digits
    rows = []
    if args.kind == "cf":
        term, seed = parse_number(args.term), parse_number(args.seed)
        for k, c in enumerate(cf_convergents(CFConfig(term, seed, count)), 1):
            rows.append({"index": k, "exact": to_json(c), "decimal": eval_decimal(c, digits).digits,
                         "text": format_exact(c)})
    elif args.kind == "radical":
        c, start = parse_number(args.term), parse_number(args.seed)
        for k, d in enumerate(nested_radical(RadicalConfig(c, start, count), digits), 1):
            rows.append({"index": k, "exact": None, "decimal": d.digits, "text": d.digits})
    elif args.kind == "h-seq":
        for k, h in enumerate(h_sequence(count), 1):
            rows.append({"index": k, "exact": to_json(h), "decimal": eval_decimal(h, digits).digits,
                         "text": format_exact(h)})
    elif args.kind == "fib":
        for k, (f, r) in enumerate(fibonacci_ratios(count), 1):
            rows.append({"index": k, "fibonacci": f, "ratio": None if r is None else f"{r.numerator}/{r.denominator}",
                         "text": f"{f}" if r is None else f"{f} {r}"})
    if args.json:
        out.write(dumps(rows) + "\n")
    else:
        for row in rows:
            line = f"{row['index']} {row['text']}"
            if "decimal" in row and row["decimal"] != row["text"]:
                line += f" ≈ {row['decimal']}"
            out.write(line + "\n")
    return 0


def cmd_extend(args, out) -> int:
    if args.sequence is not None:
        k = parse_int(args.sequence)
        if args.json:
            out.write(dumps(extend_sequence_json(k, args.digits)) + "\n")
        else:
            for i, x in enumerate(extend_sequence(k)):
                tag = format_exact(x) if is_exact(x) else "~"
                out.write(f"x{i} {tag} ≈ {eval_decimal(x, args.digits).digits}\n")
        return 0
    if args.rho is None:
        raise UsageError("extend needs --rho R (with --branch) or --sequence K")
    rho = parse_number(args.rho)
    branch = {"above": "above_phi", "below": "below_phi"}[args.branch]
    x = extend_ratio(rho, branch)
    if args.json:
        out.write(dumps({"x": _exact_or_null(x), "decimal": eval_decimal(x, args.digits).digits,
                         "subdivision": subdivide(x).to_json(args.digits)}) + "\n")
    else:
        text = format_exact(x) if is_exact(x) else "x"
        out.write(f"{text} ≈ {eval_decimal(x, args.digits).digits}\n")
    return 0


def _fold(args):
    if args.kind == "cf":
        value, trace = fold_cf(parse_int(args.n), parse_int(args.depth))
        return {"value": value}, trace
    if args.kind == "harmonic":
        s, h, trace = fold_harmonic(parse_rational(args.m), parse_rational(args.n))
        return {"sum_recip": s, "harmonic_mean": h}, trace
    value, trace = fold_golden_from(parse_rational(args.x), parse_int(args.depth))
    return {"value": value}, trace


def cmd_fold(args, out) -> int:
    result, trace = _fold(args)
    if args.json:
        out.write(trace.to_jsonl())
        return 0
    for s in trace:
        out.write(f"{s.op} {s.before} -> {s.after}\n")
    for k, v in result.items():
        out.write(f"{k} {v} ≈ {eval_decimal(v, args.digits).digits}\n")
    return 0


def cmd_render(args, out) -> int:
    style = Style(unit_px=args.unit_px)
    if args.figure == "subdivision":
        svg = render_subdivision(parse_number(args.x), style)
    elif args.figure == "extend":
        svg = render_extend_sequence(parse_int(args.count), style)
    elif args.figure == "fold":
        _, trace = _fold(argparse.Namespace(kind=args.fold_kind, n=args.n, m=args.m, x=args.x, depth=args.depth))
        svg = render_fold_trace(trace, style)
    else:
        svg = render_construction(args.target, style)
    Path(args.out).write_text(svg, encoding="utf-8")
    out.write(f"wrote {args.out}\n")
    return 0


def cmd_verify(args, out) -> int:
    results = run_identities()
    for name, ok in results:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
    failed = sum(not ok for _, ok in results)
    out.write(f"{len(results) - failed}/{len(results)} identities hold\n")
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = Parser(prog="chiratio", description="Exact arithmetic for the chi ratio and its relatives.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    c = sub.add_parser("constants", help="print the named constants")
    c.add_argument("--digits", type=int, default=10)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_constants)

    v = sub.add_parser("converge", help="convergent sequences")
    v.add_argument("kind", choices=["cf", "radical", "h-seq", "fib"])
    v.add_argument("--term", default="1", help="partial quotient (cf) or coefficient (radical)")
    v.add_argument("--seed", default="1", help="innermost value (cf) or start (radical)")
    v.add_argument("--count", default="8")
    v.add_argument("--digits", type=int, default=10)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_converge)

    e = sub.add_parser("extend", help="proportional rectangle extension")
    e.add_argument("--rho")
    e.add_argument("--branch", choices=["above", "below"], default="above")
    e.add_argument("--sequence")
    e.add_argument("--digits", type=int, default=10)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_extend)

    f = sub.add_parser("fold", help="paper folding simulations")
    f.add_argument("kind", choices=["cf", "harmonic", "golden"])
    f.add_argument("--n", default="2")
    f.add_argument("--m", default="3")
    f.add_argument("--x", default="1")
    f.add_argument("--depth", default="5")
    f.add_argument("--digits", type=int, default=10)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fold)

    r = sub.add_parser("render", help="write an SVG figure")
    r.add_argument("figure", choices=["subdivision", "extend", "fold", "construction"])
    r.add_argument("--out", required=True)
    r.add_argument("--x", default="phi")
    r.add_argument("--count", default="4")
    r.add_argument("--fold-kind", choices=["cf", "harmonic", "golden"], default="cf")
    r.add_argument("--n", default="3")
    r.add_argument("--m", default="3")
    r.add_argument("--depth", default="2")
    r.add_argument("--target", choices=["phi", "chi"], default="phi")
    r.add_argument("--unit-px", type=int, default=100)
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", help="run the exact identity suite")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"chiratio: error: {exc}", file=sys.stderr)
        return 1
    except (TypeError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"chiratio: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
