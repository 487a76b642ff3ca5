"""Command-line front end: ``python -m fibroman <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 on domain errors.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import cobweb, fcalc, harmonic, jackson_q
from .psi_arith import (IDENTITIES, fibonacci, fibonomial, format_rational, get_instance,
                        identity_sweep, parse_rational, roman_coefficient)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _poly(text):
    try:
        return [parse_rational(c) for c in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _window(text):
    sep = ":" if ":" in text else ","
    try:
        lo, hi = (int(v) for v in text.split(sep))
    except ValueError:
        raise argparse.ArgumentTypeError("window must look like LO:HI, got %r" % text) from None
    return lo, hi


def _real(text):
    # exact when the text is a rational literal, so sums stay exact
    try:
        return parse_rational(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("not a number: %r" % text) from None


def _num(value, approx):
    if isinstance(value, Fraction) or isinstance(value, int):
        return float(value) if approx else format_rational(value)
    return float(value)


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(obj):
    return json.dumps(obj, sort_keys=True) + "\n"


def _instance(args):
    return get_instance(args.instance, getattr(args, "q", None))


def cmd_fib(args):
    value = fibonacci(args.n)
    if args.format == "json":
        return _dump({"n": args.n, "value": value})
    if args.format == "csv":
        return _csv([["n", "value"], [args.n, value]])
    return "%d\n" % value


def _scalar(args, name, value, **extra):
    shown = _num(value, args.approx)
    if args.format == "json":
        return _dump(dict(extra, **{name: shown}))
    if args.format == "csv":
        keys = sorted(extra)
        return _csv([keys + [name], [extra[k] for k in keys] + [shown]])
    return "%s\n" % shown


def cmd_fibonomial(args):
    return _scalar(args, "value", fibonomial(args.n, args.k), n=args.n, k=args.k)


def cmd_roman(args):
    inst = _instance(args)
    return _scalar(args, "value", roman_coefficient(inst, args.n, args.k),
                   instance=inst.name, n=args.n, k=args.k)


def cmd_table(args):
    inst = _instance(args)
    lo = -args.rows if args.negative else 0
    rows = []
    for n in range(lo, args.rows + 1):
        ks = range(lo, args.rows + 1) if args.negative else range(n + 1)
        rows.append([(n, k, roman_coefficient(inst, n, k)) for k in ks])
    if args.format == "json":
        return _dump({"instance": inst.name,
                      "rows": [{"n": r[0][0], "values": [_num(v, args.approx) for _, _, v in r]}
                               for r in rows]})
    if args.format == "csv":
        return _csv([["n", "k", "value"]]
                    + [[n, k, _num(v, args.approx)] for r in rows for n, k, v in r])
    return "".join(" ".join(str(_num(v, args.approx)) for _, _, v in r) + "\n" for r in rows)


def cmd_sweep(args):
    report = identity_sweep(_instance(args), args.window, args.identity)
    if args.format == "json":
        return _dump(report.to_json())
    if args.format == "csv":
        return _csv([["point", "lhs", "rhs"]]
                    + [[" ".join(map(str, p)), format_rational(l), format_rational(r)]
                       for p, l, r in report.violations])
    lines = ["%s %s [%d, %d]: %d checked, %d violations"
             % (report.identity, report.instance, report.window[0], report.window[1],
                report.checked, len(report.violations))]
    lines += ["%s: %s != %s" % (p, format_rational(l), format_rational(r))
              for p, l, r in report.violations]
    return "\n".join(lines) + "\n"


def cmd_cobweb(args):
    P = cobweb.build(args.levels)
    if args.action == "dot":
        return cobweb.export_dot(P, max_levels=args.max_levels)
    start = args.start or 1
    end = args.end or args.levels
    if args.action == "count":
        count = cobweb.count_chains_from_point(P, start, end)
        if args.format == "json":
            return _dump({"levels": args.levels, "from": start, "to": end, "count": count})
        if args.format == "csv":
            return _csv([["from", "to", "count"], [start, end, count]])
        return "%d\n" % count
    chains = cobweb.enumerate_chains(P, start, end)
    names = [["L%d_%d" % e for e in chain] for chain in chains]
    if args.format == "json":
        return _dump({"from": start, "to": end, "chains": names})
    if args.format == "csv":
        return _csv(names)
    return "".join(" ".join(c) + "\n" for c in names)


def _emit_series(args, s):
    if args.format == "json":
        return _dump(s.to_json())
    if args.format == "csv":
        return _csv([["degree", "coefficient"]]
                     + [[n, _num(c, args.approx)] for n, c in s.items()])
    return str(s) + ("  [truncated]" if s.truncated else "") + "\n"


def cmd_series(args):
    inst = _instance(args)
    N = args.order

    def poly(coeffs):
        if coeffs is None:
            raise ValueError("--poly is required for this operation")
        return fcalc.FormalSeries(dict(enumerate(coeffs)), N)

    op = args.op
    if op == "d":
        s = fcalc.dpsi(inst, poly(args.poly))
    elif op == "d0":
        s = fcalc.d0(poly(args.poly))
    elif op == "D":
        s = fcalc.ordinary_d(poly(args.poly))
    elif op == "xhat":
        s = fcalc.xhat(inst, poly(args.poly))
    elif op == "int":
        s = fcalc.int_psi(inst, poly(args.poly))
    elif op == "star":
        if args.right is None:
            raise ValueError("star needs --right")
        s = fcalc.star(inst, poly(args.poly), poly(args.right))
    elif op == "exp":
        s = fcalc.exp_psi(inst, args.alpha, N)
    elif op == "power":
        s = fcalc.star_power(inst, args.n, N)
    else:  # delta
        s = fcalc.delta_psi(inst, poly(args.poly))
    return _emit_series(args, s)


def cmd_qcalc(args):
    qp = jackson_q.QParam(args.q)
    if args.op == "verify":
        ok = jackson_q.verify_right_inverse(qp, args.N)
        return _dump({"q": format_rational(qp.q), "N": args.N, "holds": ok}) \
            if args.format == "json" else "%s\n" % str(ok).lower()
    if args.poly is None:
        raise ValueError("--poly is required for qcalc %s" % args.op)
    s = fcalc.FormalSeries(dict(enumerate(args.poly)), args.order)
    if args.op == "d":
        return _emit_series(args, jackson_q.dq(qp, s))
    if args.op == "int":
        return _emit_series(args, jackson_q.int_q_series(qp, s))
    value = jackson_q.int_q_sum(qp, s, args.z, args.K)
    return _scalar(args, "value", value, q=format_rational(qp.q), K=args.K)


def cmd_logbinomial(args):
    if args.study:
        Ks = list(range(10, args.K + 1, 10)) or [args.K]
        rows = harmonic.residual_study(args.t, args.n, args.a, args.x, Ks)
        if args.format == "json":
            return _dump([{"K": K, "residual": r} for K, r in rows])
        return _csv([["K", "residual"]] + [[K, repr(r)] for K, r in rows])
    rhs = harmonic.log_binomial_rhs(args.t, args.n, args.a, args.x, args.K)
    residual = harmonic.log_binomial_residual(args.t, args.n, args.a, args.x, args.K)
    out = {"t": args.t, "n": args.n, "K": args.K,
           "rhs": _num(rhs, args.approx), "residual": residual}
    if args.format == "json":
        return _dump(out)
    if args.format == "csv":
        keys = sorted(out)
        return _csv([keys, [out[k] for k in keys]])
    return "rhs %s\nresidual %r\n" % (out["rhs"], residual)


def cmd_harmonicnum(args):
    return _scalar(args, "value", harmonic.fib_harmonic(args.n), n=args.n)


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--approx", action="store_true", help="print rationals as floats")

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("--instance", choices=("fibonacci", "classic", "q-gauss"), default="fibonacci")
    inst.add_argument("--q", type=_rational, help="q for the q-gauss instance")

    parser = _Parser(prog="fibroman", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fib", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("fibonomial", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_fibonomial)

    p = sub.add_parser("roman", parents=[common, inst])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_roman)

    p = sub.add_parser("table", parents=[common, inst])
    p.add_argument("--rows", type=int, default=8)
    p.add_argument("--negative", action="store_true", help="square window [-rows, rows]^2")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", parents=[common, inst])
    p.add_argument("--window", type=_window, default=(-12, 12))
    p.add_argument("--identity", choices=sorted(IDENTITIES), required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cobweb", parents=[common])
    p.add_argument("action", choices=("count", "enumerate", "dot"))
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--from", dest="start", type=int)
    p.add_argument("--to", dest="end", type=int)
    p.add_argument("--max-levels", type=int, default=12)
    p.set_defaults(func=cmd_cobweb)

    p = sub.add_parser("series", parents=[common, inst])
    p.add_argument("op", choices=("d", "d0", "D", "xhat", "int", "star", "exp", "power", "delta"))
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--poly", type=_poly, help="coefficients c0,c1,... (rationals)")
    p.add_argument("--right", type=_poly, help="right factor for star")
    p.add_argument("--alpha", type=_rational, default=Fraction(1))
    p.add_argument("--n", type=int, default=1, help="exponent for power")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("qcalc", parents=[common])
    p.add_argument("op", choices=("d", "int", "sum", "verify"))
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--poly", type=_poly)
    p.add_argument("--z", type=_rational, default=Fraction(1))
    p.add_argument("--K", type=int, default=200)
    p.add_argument("--N", type=int, default=32)
    p.set_defaults(func=cmd_qcalc)

    p = sub.add_parser("logbinomial", parents=[common])
    p.add_argument("--t", type=int, choices=(0, 1), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_real, required=True)
    p.add_argument("--x", type=_real, required=True)
    p.add_argument("--K", type=int, default=harmonic.DEFAULT_K)
    p.add_argument("--study", action="store_true", help="residual at K = 10, 20, ... as CSV")
    p.set_defaults(func=cmd_logbinomial)

    p = sub.add_parser("harmonicnum", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_harmonicnum)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return exc.code or 0
    try:
        out = args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print("fibroman %s: error: %s" % (args.command, exc), file=stderr)
        return 1
    stdout.write(out)
    return 0


def main():
    sys.exit(run())
