"""Command-line frontend.

Exit codes: 0 when every check passes, 1 when some identity check fails,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import identities as ids
from .algebra import quotient_normalize
from .lseries import (
    SatakeError,
    generate_satake,
    global_coefficient,
    is_prime,
    load_satake,
    numeric_verify_theorem1,
    save_satake,
)
from .symmetric import CONVENTIONS, FourierIndex, Partition, lambda_of_index, schur, schur_oracle

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    """``"2,3,5"`` or ``"2-6"`` or a mix like ``"2,4-6"``."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "-" in chunk[1:]:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def _int_list(text):
    try:
        return parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers like 2,3 or 2-6, got {text!r}") from None


def _jobs_default() -> int:
    raw = os.environ.get("EXTSQ_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--convention", choices=CONVENTIONS, default="geq",
                        help="exponent-to-partition map (default: lambda_j = sum_{i>=j} k_i)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (fallback: EXTSQ_JOBS)")
    common.add_argument("--no-quotient", action="store_true", help="skip the alpha_1...alpha_n = 1 reduction")

    parser = argparse.ArgumentParser(prog="extsq", description="Exact checks of the exterior-square Dirichlet series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-bf", parents=[common], help="local generating-function identity with the L0 factor")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--capX", type=int, default=4)
    p.add_argument("--capY", type=int, default=4)
    p.add_argument("--unconstrained", action="store_true", help="full partitions, no L0, no quotient")
    p.add_argument("--max-weight", type=int, default=None)

    p = sub.add_parser("verify-thm1", parents=[common], help="Theorem 1 per prime")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--capY", type=int, default=5)

    p = sub.add_parser("verify-hecke", parents=[common], help="Hecke relations at a prime")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--k", type=int, default=None, help="omit to sweep k = 0..2")
    p.add_argument("--e", type=_int_list, default=None, help="even-slot exponents; omit to sweep entries 0..2")

    p = sub.add_parser("verify-littlewood", parents=[common], help="even-conjugate Littlewood identity")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--d", type=int, default=None, help="Y-degree; omit to sweep 0..5")

    p = sub.add_parser("verify-reindex", parents=[common], help="summed Hecke relations vs the Fourier double series")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--capX", type=int, default=3)
    p.add_argument("--capY", type=int, default=3)

    p = sub.add_parser("schur", parents=[common], help="print a Schur polynomial")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="use tableau enumeration")

    p = sub.add_parser("coeffs", parents=[common], help="inspect local or global coefficients")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", default=None, help="Fourier exponents, e.g. 1,0,2")
    p.add_argument("--series", choices=("bf-sum", "bf-product", "thm1-sum", "exterior"), default="bf-sum")
    p.add_argument("--capX", type=int, default=2)
    p.add_argument("--capY", type=int, default=2)
    p.add_argument("--input", default=None, help="Satake file for numeric global coefficients")
    p.add_argument("--m", type=_int_list, default=None, help="global arguments m_1,...,m_{n-1}")

    p = sub.add_parser("numeric-check", parents=[common], help="Theorem 1 on numeric Satake data")
    p.add_argument("--input", required=True)
    p.add_argument("--max-m", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--listed-primes-only", action="store_true",
                   help="restrict to m whose prime factors all appear in the data")

    p = sub.add_parser("gen-satake", help="write random unit-product Satake data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--primes", type=_int_list, default=None, help="default: primes up to 100")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--label", default=None)
    p.add_argument("--output", default=None)
    return parser


def _checks(args) -> list[tuple[tuple, object, dict]]:
    """(sort key, verifier, kwargs) for every check the command asks for."""
    quotient = not args.no_quotient
    conv = args.convention
    out = []
    if args.command == "verify-bf":
        for n in args.n:
            if n < 2:
                raise UsageError("verify-bf needs n >= 2")
            kw = dict(n=n, cap_x=args.capX, cap_y=args.capY, constrained=not args.unconstrained,
                      quotient=quotient, convention=conv, max_weight=args.max_weight)
            out.append(((n,), ids.verify_bf, kw))
    elif args.command == "verify-thm1":
        for n in args.n:
            if n < 2:
                raise UsageError("verify-thm1 needs n >= 2")
            out.append(((n,), ids.verify_theorem1, dict(n=n, cap_y=args.capY, convention=conv, quotient=quotient)))
    elif args.command == "verify-hecke":
        for n in args.n:
            if n < 3:
                raise UsageError("verify-hecke needs n >= 3")
            slots = len(ids.even_slots(n))
            ks = [args.k] if args.k is not None else range(3)
            if args.e is not None:
                if len(args.e) > slots:
                    raise UsageError(f"n={n} has {slots} even slots, got {len(args.e)} exponents")
                es = [tuple(args.e)]
            else:
                es = list(product(range(3), repeat=slots))
            for k in ks:
                if k < 0:
                    raise UsageError("--k must be >= 0")
                for e in es:
                    out.append(((n, k, e), ids.verify_hecke, dict(n=n, k=k, e=e, convention=conv, quotient=quotient)))
    elif args.command == "verify-littlewood":
        ds = [args.d] if args.d is not None else range(6)
        for n in args.n:
            if n < 2:
                raise UsageError("verify-littlewood needs n >= 2")
            for d in ds:
                if d < 0:
                    raise UsageError("--d must be >= 0")
                out.append(((n, d), ids.verify_littlewood, dict(n=n, d=d)))
    elif args.command == "verify-reindex":
        for n in args.n:
            if n < 3:
                raise UsageError("verify-reindex needs n >= 3")
            kw = dict(n=n, cap_x=args.capX, cap_y=args.capY, convention=conv, quotient=quotient)
            out.append(((n,), ids.verify_reindexing, kw))
    return out


def _call(job):
    fn, kw = job
    return fn(**kw)


def run_checks(checks, jobs: int = 1) -> list:
    checks = sorted(checks, key=lambda c: c[0])
    payload = [(fn, kw) for _, fn, kw in checks]
    if jobs > 1 and len(payload) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_call, payload))
    return [_call(job) for job in payload]


def format_report(report: ids.VerificationReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    line = f"{report.status.upper():4}  {report.identity:16} {params}  terms={report.terms_checked}  {report.elapsed_ms:.1f} ms"
    if report.discrepancy is not None:
        line += "\n      first discrepancy: " + json.dumps(report.discrepancy.to_dict())
    return line


def _emit(reports, fmt, out) -> int:
    for r in reports:
        print(r.to_json() if fmt == "json" else format_report(r), file=out)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_schur(args, out) -> int:
    lam = Partition.parse(args.lam)
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    poly = schur_oracle(lam, args.n) if args.oracle else schur(lam, args.n)
    if args.format == "json":
        print(json.dumps({"lambda": lam.text(), "n": args.n, "poly": poly.to_text()}, separators=(",", ":")), file=out)
    else:
        print(f"S[{lam.text()}](a1..a{args.n}) = {poly}", file=out)
    return EXIT_PASS


def _cmd_coeffs(args, out) -> int:
    quotient = not args.no_quotient
    if args.input is not None:
        data = load_satake(args.input)
        if args.m is None:
            raise UsageError("coeffs --input needs --m")
        value = global_coefficient(args.m, data, args.convention)
        if args.format == "json":
            print(json.dumps({"m": args.m, "value": [value.real, value.imag]}, separators=(",", ":")), file=out)
        else:
            print(f"A({','.join(map(str, args.m))}) = {value.real:.12g} {value.imag:+.12g}j", file=out)
        return EXIT_PASS
    if args.k is not None:
        k = FourierIndex.parse(args.k)
        n = k.n
        if args.n is not None and args.n != n:
            raise UsageError(f"--k has {len(k)} entries, which means n={n}, not {args.n}")
        lam = lambda_of_index(k, args.convention)
        poly = schur(lam, n)
        if quotient:
            poly = quotient_normalize(poly)
        if args.format == "json":
            print(json.dumps({"k": k.text(), "lambda": lam.text(), "n": n, "poly": poly.to_text()},
                             separators=(",", ":")), file=out)
        else:
            print(f"A(p^{k.text()}) = S[{lam.text()}] = {poly}", file=out)
        return EXIT_PASS
    if args.n is None or args.n < 2:
        raise UsageError("coeffs needs --n >= 2 (or --k, or --input with --m)")
    n, cx, cy = args.n, args.capX, args.capY
    if args.series == "bf-sum":
        series = ids.bf_sum_side(n, cx, cy, args.convention, quotient)
    elif args.series == "bf-product":
        series = ids.bf_product_side(n, cx, cy, quotient=quotient)
    elif args.series == "thm1-sum":
        series = ids.theorem1_sum_side(n, cy, args.convention, quotient)
    else:
        series = ids.exterior_square_factor(n, 0, cy)
        if quotient:
            series = series.normalized()
    for (a, b), poly in series.items():
        if args.format == "json":
            print(json.dumps({"x_degree": a, "y_degree": b, "poly": poly.to_text()}, separators=(",", ":")), file=out)
        else:
            print(f"X^{a} Y^{b}: {poly}", file=out)
    return EXIT_PASS


def _cmd_numeric(args, out) -> int:
    data = load_satake(args.input)
    report = numeric_verify_theorem1(data, args.max_m, args.tol, args.listed_primes_only, args.convention)
    return _emit([report], args.format, out)


def _cmd_gen(args, out) -> int:
    primes = args.primes if args.primes is not None else [p for p in range(2, 101) if is_prime(p)]
    data = generate_satake(args.n, primes, args.seed, args.label)
    if args.output:
        save_satake(data, args.output)
    else:
        print(json.dumps(data.to_dict(), indent=2), file=out)
    return EXIT_PASS


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.command == "schur":
            return _cmd_schur(args, out)
        if args.command == "coeffs":
            return _cmd_coeffs(args, out)
        if args.command == "numeric-check":
            return _cmd_numeric(args, out)
        if args.command == "gen-satake":
            return _cmd_gen(args, out)
        jobs = args.jobs if args.jobs is not None else _jobs_default()
        if jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return _emit(run_checks(_checks(args), jobs), args.format, out)
    except (UsageError, SatakeError, ValueError, OSError) as exc:
        print(f"extsq: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
