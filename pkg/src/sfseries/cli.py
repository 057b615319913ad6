"""Command-line front end: reproduce the four series tables, run the
appendix identity checks, verify single identities with machine-readable
reports, and emit figure sample data as CSV.

Exit codes: 0 all checks pass, 1 an identity failed its tolerance,
2 usage error, 3 summation did not converge within the term budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exactnum import default_precision
from .identities import APPENDIX_CHECK_IDS, DEFAULT_TOLERANCES, appendix_all, \
    appendix_check, registry, verify_identity
from .qmodels import TrialFunction

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3

_TABLE_FAMILIES = {1: "f1", 2: "f3", 3: "f4", 4: "f2"}
_TABLE_NUS = {1: range(1, 11), 2: range(1, 11), 3: range(1, 11), 4: range(0, 10)}

_TABLE_HEADINGS = {
    1: "sum of 2^(2n)/(2n+1)! Gamma(n+3/2)^2 2F1(-n,(nu+2)/2;3/2;1/2)^2, n >= 0",
    2: "sum of J_(nu+1)(n pi)^2 / n^(2 nu), n >= 1",
    3: "sum of H_nu(n pi)^2 / n^(2 nu), n >= 1",
    4: "sum of [L_nu^(2n+1-nu)(b^2/2)]^2 b^(4n) / (2^(2n)(2n+1)!), n >= 0",
}


def _parse_b(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sfseries",
        description="Verification of eigenbasis-expansion series identities "
                    "for special functions.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="reproduce one of the four series tables")
    t.add_argument("--id", type=int, choices=(1, 2, 3, 4), required=True)
    t.add_argument("--b", type=_parse_b, default=None,
                   help="evaluation point b for table 4 (rational, e.g. 1/2)")
    t.add_argument("--format", choices=("human", "csv", "json"),
                   default="human")
    t.add_argument("--tol", type=float, default=None)
    t.add_argument("--max-terms", type=int, default=None)
    t.add_argument("--mode", choices=("exact", "float"), default=None)
    t.add_argument("--precision", type=int, default=None)

    v = sub.add_parser("verify", help="verify a single identity, JSON report")
    v.add_argument("--family", choices=("f1", "f2", "f3", "f4"), required=True)
    v.add_argument("--nu", type=int, required=True)
    v.add_argument("--b", type=_parse_b, default=None)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--max-terms", type=int, default=None)
    v.add_argument("--mode", choices=("exact", "float"), default=None)
    v.add_argument("--precision", type=int, default=None)

    a = sub.add_parser("appendix", help="run appendix identity checks")
    a.add_argument("--check", default=None,
                   help="check id A1..A11 (default: the full suite)")
    a.add_argument("--format", choices=("human", "csv", "json"),
                   default="human")

    d = sub.add_parser("plotdata", help="emit figure sample data as CSV")
    d.add_argument("--which", choices=("fig1a", "fig1b", "fig1c", "fig1d"),
                   required=True)
    d.add_argument("--samples", type=int, default=200)
    return p


def _mode_name(flag):
    return {None: None, "exact": "exact_rational",
            "float": "float_compensated"}[flag]


def _check_precision(precision):
    if precision is None:
        return default_precision()
    if precision < 16:
        raise SystemExit(EXIT_USAGE)
    return precision


def _row_dict(nu, report):
    return {
        "nu": nu,
        "rhs_exact": report.rhs_exact,
        "rhs_float": report.rhs_float,
        "total": report.total,
        "rel_err": report.rel_err,
        "pass": bool(report.converged),
    }


def cmd_table(args) -> int:
    _check_precision(args.precision)
    family = _TABLE_FAMILIES[args.id]
    if args.id == 4 and args.b is None:
        print("error: table 4 requires --b (evaluation point)",
              file=sys.stderr)
        return EXIT_USAGE
    rows = []
    any_fail = False
    any_nonconv = False
    for nu in _TABLE_NUS[args.id]:
        report = verify_identity(family, nu, b=args.b, tol=args.tol,
                                 mode=_mode_name(args.mode),
                                 max_terms=args.max_terms)
        rows.append(_row_dict(nu, report))
        if not report.summation_converged:
            any_nonconv = True
        if not report.converged:
            any_fail = True

    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        print("nu,rhs_exact,rhs_float,total,rel_err,pass")
        for r in rows:
            print(f"{r['nu']},{r['rhs_exact']},{r['rhs_float']!r},"
                  f"{r['total']!r},{r['rel_err']!r},{str(r['pass']).lower()}")
    else:
        title = f"Table {args.id}: {_TABLE_HEADINGS[args.id]}"
        if args.id == 4:
            title += f"  [b = {args.b}]"
        print(title)
        print(f"{'nu':>3}  {'rhs (exact)':<58} {'computed':<24} "
              f"{'rel err':<12} status")
        for r in rows:
            status = "pass" if r["pass"] else "FAIL"
            print(f"{r['nu']:>3}  {r['rhs_exact']:<58} {r['total']!r:<24} "
                  f"{r['rel_err']:<12.3e} {status}")
    if any_nonconv:
        return EXIT_NO_CONVERGENCE
    return EXIT_FAIL if any_fail else EXIT_OK


def cmd_verify(args) -> int:
    _check_precision(args.precision)
    if args.family == "f2" and args.b is None:
        print("error: family f2 requires --b", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = verify_identity(args.family, args.nu, b=args.b,
                                 tol=args.tol, mode=_mode_name(args.mode),
                                 max_terms=args.max_terms)
    except LookupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "family": report.family,
        "nu": report.nu,
        "b": None if report.b is None else float(report.b),
        "n_terms": report.n_terms,
        "partial_sum": report.partial_sum,
        "tail_estimate": report.tail_estimate,
        "total": report.total,
        "rhs_exact": report.rhs_exact,
        "rhs_float": report.rhs_float,
        "abs_err": report.abs_err,
        "rel_err": report.rel_err,
        "converged": bool(report.converged),
        "mode": report.mode,
        "elapsed_ms": report.elapsed_ms,
    }
    print(json.dumps(payload))
    if not report.summation_converged:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK if report.converged else EXIT_FAIL


def cmd_appendix(args) -> int:
    if args.check is not None:
        cid = args.check.upper()
        if cid not in APPENDIX_CHECK_IDS:
            print(f"error: unknown appendix check {args.check!r} "
                  f"(known: {', '.join(APPENDIX_CHECK_IDS)})", file=sys.stderr)
            return EXIT_USAGE
        reports = appendix_check(cid)
    else:
        reports = appendix_all()

    if args.format == "json":
        print(json.dumps([{
            "check": r.check_id, "params": r.params, "lhs": r.lhs,
            "rhs": r.rhs, "rel_err": r.rel_err, "pass": bool(r.passed),
            "tol": r.tol, "note": r.note,
        } for r in reports]))
    elif args.format == "csv":
        print("check,params,lhs,rhs,rel_err,pass,note")
        for r in reports:
            params = ";".join(f"{k}={v}" for k, v in r.params.items())
            print(f"{r.check_id},{params},{r.lhs!r},{r.rhs!r},"
                  f"{r.rel_err!r},{str(r.passed).lower()},{r.note}")
    else:
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            status = "pass" if r.passed else "FAIL"
            line = (f"{r.check_id:<4} {params:<40} rel_err={r.rel_err:<10.2e} "
                    f"{status}")
            if r.note:
                line += f"  [{r.note}]"
            print(line)
        n_pass = sum(r.passed for r in reports)
        print(f"{n_pass}/{len(reports)} checks passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


_FIGS = {
    "fig1a": ("f1", 1, 0.0, 4.0),
    "fig1b": ("f1", 0, 0.0, 4.0),
    "fig1c": ("f3", 1, 0.0, 1.0),
    "fig1d": ("f4", 1, 0.0, 1.0),
}


def cmd_plotdata(args) -> int:
    if args.samples < 2:
        print("error: --samples must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    family, nu, lo, hi = _FIGS[args.which]
    trial = TrialFunction.make(family, nu, a=1)
    n = args.samples
    print("x,psi")
    for i in range(n):
        x = lo + (hi - lo) * i / (n - 1)
        print(f"{x!r},{trial.value(x)!r}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    registry()  # builds and self-checks the identity data once
    handler = {
        "table": cmd_table,
        "verify": cmd_verify,
        "appendix": cmd_appendix,
        "plotdata": cmd_plotdata,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
