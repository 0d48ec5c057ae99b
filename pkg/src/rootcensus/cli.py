"""Command-line front end.

Every subcommand is a pure mapping from argv to output text: identical inputs
produce byte-identical output regardless of --threads (or the RC_THREADS
environment variable). CSV uses comma separators, dot decimal points, and \\n
line endings.

Grammar:
    census  {poly|fixed|squarefree|simultaneous|qr} ...
    constants --name <id> [--trunc P]
    expand  {period|block|wieferich} ...
    class   {h|girstmair|hirzebruch|cfrac} ...
    elliptic {order|structure|census|brun|traces|satotate|divisor} --curve a,b ...
    smooth  {psi|theta|rho} ...
    orders  {ord|proot|relative|charcheck|expsum} ...
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from . import census as census_mod
from . import densities, elliptic, expansions, orders, smooth
from .census import PolySpec

__all__ = ["run", "main", "parse_poly"]


def parse_poly(text: str) -> PolySpec:
    """Parse 'x^3+2', '326x^2+3x-1', ... into a PolySpec."""
    s = text.replace(" ", "").replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        m = re.fullmatch(r"(-?\d*)(x(?:\^(\d+))?)?", term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coef_s, has_x, exp_s = m.group(1), m.group(2), m.group(3)
        coef = int(coef_s) if coef_s not in ("", "-") else (-1 if coef_s == "-" else 1)
        exp = (int(exp_s) if exp_s else 1) if has_x else 0
        coeffs[exp] = coeffs.get(exp, 0) + coef
    deg = max(coeffs)
    return PolySpec(tuple(coeffs.get(k, 0) for k in range(deg + 1)))


def _int_arg(text: str) -> int:
    """Integer bound, allowing scientific notation like 1e12."""
    v = float(text)
    iv = int(v)
    if iv != v:
        raise argparse.ArgumentTypeError(f"{text} is not an integer")
    return iv


def _threads(args: argparse.Namespace) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("RC_THREADS")
    return max(1, int(env)) if env else 1


class _DomainError(Exception):
    pass


def _emit(lines: list[str], args: argparse.Namespace) -> None:
    text = "\n".join(lines) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(value: float, places: int = 9) -> str:
    return f"{value:.{places}f}"


def _cmd_census(args: argparse.Namespace) -> list[str]:
    if args.verb == "poly":
        f = parse_poly(args.f)
        records = census_mod.poly_census(
            f, args.u, args.x, hits_mode=args.mode, threads=_threads(args)
        )
        if args.format == "json":
            return [
                json.dumps(
                    [
                        {
                            "x": r.x,
                            "baseline": r.baseline,
                            "hits": r.hits,
                            "ratio": round(r.ratio, 6),
                            "c_estimate": round(r.c_estimate(f.degree), 6),
                        }
                        for r in records
                    ]
                )
            ]
        return ["x,baseline,hits,ratio,c_estimate"] + [
            r.csv_row(f.degree) for r in records
        ]
    if args.verb == "fixed":
        rec = census_mod.census_fixed_root(args.u, args.x, args.q, args.a)
    elif args.verb == "squarefree":
        rec = census_mod.census_squarefree_totient(args.u, args.x)
    elif args.verb == "simultaneous":
        us = [int(t) for t in args.u.split(",")]
        rec = census_mod.census_simultaneous(us, args.x)
    elif args.verb == "qr":
        rec = census_mod.census_quadratic_residue(args.u, args.x)
    else:  # pragma: no cover
        raise AssertionError
    return ["x,baseline,hits,ratio,c_estimate", rec.csv_row(1)]


def _cmd_constants(args: argparse.Namespace) -> list[str]:
    names = (
        [args.name]
        if args.name != "all"
        else sorted(densities.NAMED_CONSTANTS) + ["squarefree_totient_a0sq"]
    )
    out = ["name,value,truncation_prime,tail_bound"]
    for name in names:
        r = densities.named_constant(name, args.trunc)
        out.append(f"{name},{_fmt(float(r.value), 15)},{r.truncation_prime},{r.tail_bound:.3e}")
    return out


def _cmd_expand(args: argparse.Namespace) -> list[str]:
    if args.verb == "period":
        return [str(expansions.expansion_period(args.n, args.base))]
    if args.verb == "block":
        rec = expansions.repeating_block(args.n, args.base)
        digits = "".join(str(d) for d in rec.digits)
        return [f"{rec.n},{rec.base},{rec.period},{digits}"]
    if args.verb == "wieferich":
        return [str(expansions.is_wieferich(args.p, args.base)).lower()]
    raise AssertionError  # pragma: no cover


def _cmd_class(args: argparse.Namespace) -> list[str]:
    if args.verb == "h":
        return [str(expansions.class_number_imag(args.p))]
    if args.verb == "girstmair":
        alt, holds = expansions.girstmair_check(args.p, args.base)
        expected = (args.base + 1) * expansions.class_number_imag(args.p)
        return ["p,value,expected,holds", f"{args.p},{alt},{expected},{str(holds).lower()}"]
    if args.verb == "hirzebruch":
        res = expansions.hirzebruch_check(args.p)
        expected = 3 * expansions.class_number_imag(args.p)
        flag = str(res.holds).lower() if res.applicable else "not-applicable"
        return ["p,value,expected,holds", f"{args.p},{res.alt_sum},{expected},{flag}"]
    if args.verb == "cfrac":
        a0, quots = expansions.sqrt_continued_fraction(args.n)
        return [f"{a0};" + ",".join(str(q) for q in quots)]
    raise AssertionError  # pragma: no cover


def _parse_curve(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _DomainError("--curve expects 'a,b'")
    return int(parts[0]), int(parts[1])


def _cmd_elliptic(args: argparse.Namespace) -> list[str]:
    a, b = _parse_curve(args.curve)
    if args.verb == "order":
        return [str(elliptic.curve_order(elliptic.Curve(a, b, args.p)))]
    if args.verb == "structure":
        st = elliptic.group_structure(elliptic.Curve(a, b, args.p))
        return [f"{st.n},{st.d},{st.e}"]
    if args.verb == "census":
        rows = elliptic.prime_order_census((a, b), args.x, args.d, include_bad=args.include_bad)
        disc = -16 * (4 * a**3 + 27 * b**2)
        return ["p,n,n_over_d,flag_bad"] + [
            f"{p},{n * args.d},{n},{'true' if disc % p == 0 else 'false'}"
            for p, n in rows
        ]
    if args.verb == "brun":
        val = elliptic.elliptic_brun((a, b), args.x, args.d, include_bad=args.include_bad)
        return [_fmt(float(val), 9)]
    if args.verb == "traces":
        rows = elliptic.frobenius_traces((a, b), args.x)
        return ["p,a_p"] + [f"{p},{t}" for p, t in rows]
    if args.verb == "satotate":
        rows = elliptic.sato_tate_series((a, b), args.x)
        counts = [0] * 20
        for _, z in rows:
            idx = min(19, max(0, int((z + 1) * 10)))
            counts[idx] += 1
        return ["bin_low,count"] + [
            f"{_fmt(-1 + i * 0.1, 1)},{c}" for i, c in enumerate(counts)
        ]
    if args.verb == "divisor":
        return [str(elliptic.elliptic_divisor((a, b), mode=args.mode))]
    raise AssertionError  # pragma: no cover


def _cmd_smooth(args: argparse.Namespace) -> list[str]:
    if args.verb == "psi":
        return [str(smooth.psi_count(args.x, args.y))]
    if args.verb == "theta":
        return [str(smooth.theta_count(args.x, args.y, args.z))]
    if args.verb == "rho":
        return [_fmt(smooth.dickman_rho(args.u), 9)]
    raise AssertionError  # pragma: no cover


def _cmd_orders(args: argparse.Namespace) -> list[str]:
    if args.verb == "ord":
        return [str(orders.multiplicative_order(args.u, args.p))]
    if args.verb == "proot":
        return [str(orders.least_primitive_root(args.p))]
    if args.verb == "relative":
        rows = orders.relative_order_series(args.u, args.x)
        return ["p,relative_order"] + [
            f"{p},{_fmt(float(frac), 9)}" for p, frac in rows
        ]
    if args.verb == "charcheck":
        v1 = orders.char_indicator_divisor(args.u, args.p)
        v2 = orders.char_indicator_divisorfree(args.u, args.p)
        return [f"{round(v1)},{round(v2)}"]
    if args.verb == "expsum":
        mx, at = orders.exp_sum_max(args.p)
        return [f"{_fmt(mx, 9)},{at}"]
    raise AssertionError  # pragma: no cover


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--output", default=None)

    top = argparse.ArgumentParser(prog="rootcensus")
    sub = top.add_subparsers(dest="command", required=True)

    def leaf(subparsers, name):
        return subparsers.add_parser(name, parents=[common])

    pc = sub.add_parser("census")
    pcs = pc.add_subparsers(dest="verb", required=True)
    p = leaf(pcs, "poly")
    p.add_argument("--f", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--x", type=_int_arg, required=True)
    p.add_argument("--mode", choices=["least", "order"], default="least")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    for verb in ("fixed", "squarefree", "qr"):
        p = leaf(pcs, verb)
        p.add_argument("--u", type=int, required=True)
        p.add_argument("--x", type=_int_arg, required=True)
        if verb == "fixed":
            p.add_argument("--q", type=int, default=1)
            p.add_argument("--a", type=int, default=0)
    p = leaf(pcs, "simultaneous")
    p.add_argument("--u", required=True, help="comma-separated residues")
    p.add_argument("--x", type=_int_arg, required=True)

    p = sub.add_parser("constants", parents=[common])
    p.add_argument("--name", required=True)
    p.add_argument("--trunc", type=_int_arg, default=10**7)

    pe = sub.add_parser("expand")
    pes = pe.add_subparsers(dest="verb", required=True)
    p = leaf(pes, "period")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    p = leaf(pes, "block")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    p = leaf(pes, "wieferich")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--base", type=int, required=True)

    pk = sub.add_parser("class")
    pks = pk.add_subparsers(dest="verb", required=True)
    p = leaf(pks, "h")
    p.add_argument("--p", type=int, required=True)
    p = leaf(pks, "girstmair")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p = leaf(pks, "hirzebruch")
    p.add_argument("--p", type=int, required=True)
    p = leaf(pks, "cfrac")
    p.add_argument("--n", type=int, required=True)

    pl = sub.add_parser("elliptic")
    pls = pl.add_subparsers(dest="verb", required=True)
    for verb in ("order", "structure"):
        p = leaf(pls, verb)
        p.add_argument("--curve", required=True)
        p.add_argument("--p", type=_int_arg, required=True)
    for verb in ("census", "brun"):
        p = leaf(pls, verb)
        p.add_argument("--curve", required=True)
        p.add_argument("--x", type=_int_arg, required=True)
        p.add_argument("--d", type=int, default=1)
        p.add_argument("--include-bad", action="store_true", dest="include_bad")
    for verb in ("traces", "satotate"):
        p = leaf(pls, verb)
        p.add_argument("--curve", required=True)
        p.add_argument("--x", type=_int_arg, required=True)
    p = leaf(pls, "divisor")
    p.add_argument("--curve", required=True)
    p.add_argument("--mode", choices=["table", "empirical"], default="empirical")

    ps = sub.add_parser("smooth")
    pss = ps.add_subparsers(dest="verb", required=True)
    p = leaf(pss, "psi")
    p.add_argument("--x", type=_int_arg, required=True)
    p.add_argument("--y", type=_int_arg, required=True)
    p = leaf(pss, "theta")
    p.add_argument("--x", type=_int_arg, required=True)
    p.add_argument("--y", type=_int_arg, required=True)
    p.add_argument("--z", type=_int_arg, required=True)
    p = leaf(pss, "rho")
    p.add_argument("--u", type=float, required=True)

    po = sub.add_parser("orders")
    pos = po.add_subparsers(dest="verb", required=True)
    p = leaf(pos, "ord")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = leaf(pos, "proot")
    p.add_argument("--p", type=int, required=True)
    p = leaf(pos, "relative")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--x", type=_int_arg, required=True)
    p = leaf(pos, "charcheck")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = leaf(pos, "expsum")
    p.add_argument("--p", type=int, required=True)

    return top


_DISPATCH = {
    "census": _cmd_census,
    "constants": _cmd_constants,
    "expand": _cmd_expand,
    "class": _cmd_class,
    "elliptic": _cmd_elliptic,
    "smooth": _cmd_smooth,
    "orders": _cmd_orders,
}


def run(argv: list[str]) -> int:
    """Execute one CLI invocation. Exit codes: 0 success, 1 domain error,
    2 usage error."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        lines = _DISPATCH[args.command](args)
    except (ValueError, KeyError, LookupError, ArithmeticError, _DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(lines, args)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
