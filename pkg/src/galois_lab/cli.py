"""galois-lab: exact Galois numbers, q-multinomials and their coefficient statistics.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import kernels
from .apps import code_count_asymptotics, demazure_basic_specialization
from .oracle import CapExceeded, character_chi, count_flags
from .permstat import deformed_galois, descent_inv_table, galois_via_macmahon, stanley_identity_check
from .qcombi import ExpansionTooLarge, galois_number, q_multinomial, rogers_szego
from .qpoly import poly_eval
from .stats import (
    cumulants,
    distribution_from_polynomial,
    normality_report,
    qmultinomial_cumulant_formula,
    rogers_szego_covariance,
)
from .verify import SUITES, run_suite

NORMALITY_CSV_HEADER = ["N", "r", "mean", "variance", "skew_sq", "ex_kurtosis", "kolmogorov"]


def _frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer, got %d" % value)
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("expected a rational number, got %r" % text)


def _emit(out, fmt: str, text: str, payload, table=None) -> None:
    """Write text, JSON or CSV. ``table`` is a header row followed by data
    rows; without one, CSV falls back to the text rendering."""
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    elif fmt == "csv" and table is not None:
        csv.writer(out, lineterminator="\n").writerows(table)
    else:
        out.write(text.rstrip("\n") + "\n")


def _coeff_table(p) -> list[list]:
    return [["exponent", "coefficient"]] + [[e, c] for e, c in enumerate(p.coeffs) if c]


def cmd_galois(args, out) -> int:
    p = galois_number(args.N, args.r)
    if args.eval is not None:
        value = poly_eval(p, args.eval)
        payload = {"N": args.N, "r": args.r, "q": _frac(args.eval), "value": _frac(value)}
        _emit(out, args.format, _frac(value), payload, [["N", "r", "q", "value"], [args.N, args.r, _frac(args.eval), _frac(value)]])
    else:
        _emit(out, args.format, p.render(), {"N": args.N, "r": args.r, "coefficients": p.to_json()}, _coeff_table(p))
    return 0


def cmd_qmultinomial(args, out) -> int:
    p = q_multinomial(args.N, args.k)
    _emit(out, args.format, p.render(), {"N": args.N, "k": args.k, "coefficients": p.to_json()}, _coeff_table(p))
    return 0


def cmd_rogers_szego(args, out) -> int:
    exp = rogers_szego(args.N, args.r)
    lines = ["%s: %s" % (",".join(map(str, k)), p.render()) for k, p in exp.coefficients.items()]
    table = [["composition", "exponent", "coefficient"]]
    for k, p in sorted(exp.coefficients.items()):
        table += [[" ".join(map(str, k)), e, c] for e, c in enumerate(p.coeffs) if c]
    _emit(out, args.format, "\n".join(lines), exp.to_json(), table)
    return 0


def cmd_descent_table(args, out) -> int:
    table = descent_inv_table(args.N, method=args.method, workers=args.jobs)
    if args.format == "csv":
        out.write(table.to_csv())
        return 0
    lines = ["t=%d: %s" % (t, p.render()) for t, p in table.rows.items()]
    payload = {"N": args.N, "rows": {str(t): p.to_json() for t, p in table.rows.items()}}
    _emit(out, args.format, "\n".join(lines), payload)
    return 0


def cmd_macmahon(args, out) -> int:
    p = galois_via_macmahon(args.N, args.r)
    _emit(out, args.format, p.render(), {"N": args.N, "r": args.r, "coefficients": p.to_json()}, _coeff_table(p))
    return 0


def cmd_deformed(args, out) -> int:
    p = deformed_galois(args.N, args.r)
    table = [["t", "exponent", "coefficient"]]
    for t, row in p.t_rows().items():
        table += [[t, e, c] for e, c in enumerate(row.coeffs) if c]
    _emit(out, args.format, str(p), {"N": args.N, "r": args.r, "terms": p.to_json()}, table)
    return 0


def cmd_cumulants(args, out) -> int:
    N = sum(args.k)
    d = distribution_from_polynomial(q_multinomial(N, args.k))
    direct = cumulants(d, args.J)
    formula = [qmultinomial_cumulant_formula(args.k, j) for j in range(1, args.J + 1)]
    lines = ["kappa_%d = %s" % (j, _frac(v)) for j, v in enumerate(direct, 1)]
    payload = {
        "k": args.k,
        "cumulants": [_frac(v) for v in direct],
        "formula": [_frac(v) for v in formula],
        "agree": direct == formula,
    }
    table = [["j", "cumulant", "formula"]] + [[j, _frac(a), _frac(b)] for j, (a, b) in enumerate(zip(direct, formula), 1)]
    _emit(out, args.format, "\n".join(lines), payload, table)
    return 0


def _normality_row(task):
    N, r, precision = task
    return normality_report(N, r, precision)


def cmd_normality(args, out) -> int:
    if any(N < 2 for N in args.N):
        raise argparse.ArgumentTypeError("normality needs every N >= 2")
    tasks = [(N, args.r, args.precision) for N in args.N]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_normality_row, tasks))
    else:
        reports = [_normality_row(t) for t in tasks]
    if args.format == "json":
        _emit(out, "json", "", [rep.to_json() for rep in reports])
        return 0
    rows = [
        [rep.N, rep.r, _frac(rep.mean), _frac(rep.variance), _frac(rep.skewness_sq_signed), _frac(rep.excess_kurtosis), rep.kolmogorov_text()]
        for rep in reports
    ]
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(NORMALITY_CSV_HEADER)
        writer.writerows(rows)
        return 0
    widths = [max(len(str(x)) for x in col) for col in zip(NORMALITY_CSV_HEADER, *rows)]
    for row in [NORMALITY_CSV_HEADER] + rows:
        out.write("  ".join(str(x).rjust(w) for x, w in zip(row, widths)) + "\n")
    return 0


def cmd_covariance(args, out) -> int:
    cov = rogers_szego_covariance(args.N, args.r)
    text = "\n".join(" ".join(_frac(x).rjust(8) for x in row) for row in cov)
    header = ["X%d" % (i + 1) for i in range(args.r)] + ["Y"]
    table = [header] + [[_frac(x) for x in row] for row in cov]
    _emit(out, args.format, text, {"N": args.N, "r": args.r, "covariance": table[1:]}, table)
    return 0


def cmd_codes(args, out) -> int:
    res = code_count_asymptotics(args.n, args.q)
    text = "\n".join(
        [
            "numerator: %s" % res.numerator.render(),
            "permutation (asymptotic estimate): %s" % _frac(res.permutation_estimate),
            "monomial (asymptotic estimate): %s" % _frac(res.monomial_estimate),
            "semilinear monomial (asymptotic estimate): %s" % _frac(res.semilinear_estimate),
        ]
    )
    table = [
        ["n", "q", "permutation", "monomial", "semilinear_monomial"],
        [res.n, res.q, _frac(res.permutation_estimate), _frac(res.monomial_estimate), _frac(res.semilinear_estimate)],
    ]
    _emit(out, args.format, text, res.to_json(), table)
    return 0


def cmd_demazure(args, out) -> int:
    spec = demazure_basic_specialization(args.N, args.r)
    text = "i = %d\nd = %d\nshifted polynomial: %s" % (spec.i, spec.d, spec.polynomial.render())
    table = [["degree", "multiplicity"]] + [[l, m] for l, m in sorted(spec.basic_specialization().items())]
    _emit(out, args.format, text, spec.to_json(), table)
    return 0


def cmd_flags(args, out) -> int:
    brute = count_flags(args.q, args.N, args.r)
    value = poly_eval(galois_number(args.N, args.r), args.q)
    payload = {"q": args.q, "N": args.N, "r": args.r, "brute_force": brute, "galois_value": value, "agree": brute == value}
    _emit(out, args.format, "%d (galois number: %d)" % (brute, value), payload)
    return 0 if brute == value else 1


def cmd_chi(args, out) -> int:
    tau = args.tau if args.tau else list(range(1, args.N + 1))
    if len(tau) != args.N:
        raise argparse.ArgumentTypeError("tau must have length N")
    value = character_chi(args.q, args.N, tau)
    _emit(out, args.format, str(value), {"q": args.q, "N": args.N, "tau": tau, "chi": value})
    return 0


def cmd_stanley(args, out) -> int:
    rep = stanley_identity_check(args.order)
    lines = ["u^%d: %s" % (n, "ok" if ok else "MISMATCH") for n, ok in enumerate(rep.per_order)]
    payload = {"order": args.order, "passed": rep.passed, "per_order": list(rep.per_order)}
    _emit(out, args.format, "\n".join(lines), payload)
    return 0 if rep.passed else 1


def cmd_verify(args, out) -> int:
    params = {"N_max": args.N_max, "r_max": args.r_max, "order": args.order, "q": args.q}
    report = run_suite(args.suite, jobs=args.jobs, **params)
    if args.format == "json":
        _emit(out, "json", "", report)
    else:
        for check in report["checks"]:
            flag = "PASS" if check["passed"] else "FAIL"
            params_text = " ".join("%s=%s" % kv for kv in check["params"].items())
            out.write("%s %s %s\n" % (flag, check["check"], params_text))
        out.write("%s: %d checks, %d failed\n" % (args.suite, report["n_checks"], report["n_failed"]))
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="galois-lab", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--version", action="version", version="galois-lab 0.1.0 (kernels: %s)" % kernels.BACKEND)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("galois", parents=[common], help="generalized Galois number G_N^(r)(q)")
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.add_argument("--eval", type=_rational, metavar="Q", help="evaluate at a rational q")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("qmultinomial", parents=[common], help="q-multinomial [N; k]_q")
    p.add_argument("N", type=_nonneg)
    p.add_argument("k", type=_int_list, help="comma-separated parts")
    p.set_defaults(func=cmd_qmultinomial)

    p = sub.add_parser("rogers-szego", parents=[common], help="full Rogers-Szego expansion")
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_rogers_szego)

    p = sub.add_parser("descent-table", parents=[common], help="(des, inv) table of S_N")
    p.add_argument("N", type=_nonneg)
    p.add_argument("--method", choices=["auto", "enumerate", "inclusion_exclusion"], default="auto")
    p.set_defaults(func=cmd_descent_table)

    p = sub.add_parser("macmahon", parents=[common], help="G_N^(r) via inversions and descents")
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_macmahon)

    p = sub.add_parser("deformed", parents=[common], help="t-deformed Galois number G_N^(r)(q, t)")
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_deformed)

    p = sub.add_parser("cumulants", parents=[common], help="cumulants of [N; k]_q")
    p.add_argument("k", type=_int_list)
    p.add_argument("--J", type=_positive, default=6)
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("normality", parents=[common], help="normality sweep for G_N^(r)")
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--N", type=_int_list, required=True, help="comma-separated N values")
    p.add_argument("--precision", type=float, default=1e-12, help="normal CDF precision")
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("covariance", parents=[common], help="covariance of the Rogers-Szego law")
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_covariance)

    p = sub.add_parser("codes", parents=[common], help="asymptotic linear code counts")
    p.add_argument("n", type=_positive)
    p.add_argument("q", type=_positive)
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("demazure", parents=[common], help="Demazure basic specialization")
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("flags", parents=[common], help="brute-force flag count over F_q")
    p.add_argument("q", type=_positive)
    p.add_argument("N", type=_nonneg)
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_flags)

    p = sub.add_parser("chi", parents=[common], help="subspaces of F_q^N fixed by a coordinate permutation")
    p.add_argument("q", type=_positive)
    p.add_argument("N", type=_nonneg)
    p.add_argument("--tau", type=_int_list, help="permutation in one-line notation (default identity)")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("stanley", parents=[common], help="truncated check of Stanley's identity")
    p.add_argument("--order", type=_nonneg, default=7)
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--N-max", dest="N_max", type=_nonneg)
    p.add_argument("--r-max", dest="r_max", type=_positive)
    p.add_argument("--q", type=_int_list, help="primes for the oracle suite")
    p.add_argument("--order", type=_nonneg, help="truncation order for the stanley suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (argparse.ArgumentTypeError, ValueError, ExpansionTooLarge, CapExceeded) as exc:
        sys.stderr.write("galois-lab: error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
