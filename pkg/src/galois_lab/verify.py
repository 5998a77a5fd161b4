"""Named verification suites. Each suite is a list of independent checks;
each check returns a JSON-ready record with its exact discrepancy."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable

from .apps import (
    code_numerator,
    demazure_character_r2,
    demazure_d,
    demazure_gamma_moments,
    gamma_mean_by_shift,
)
from .exact import elementary_symmetric, power_sum
from .oracle import count_flags, enumerate_subspaces
from .permstat import (
    galois_via_macmahon,
    stanley_identity_check,
    stanley_identity_check_cleared,
)
from .qcombi import compositions, galois_number, galois_number_by_definition, q_binomial, q_multinomial
from .qpoly import QPolynomial, poly_eval
from .stats import (
    cumulants,
    distribution_from_polynomial,
    galois_mean_var_formula,
    multinomial_weighted_sum_direct,
    multinomial_weighted_sums,
    qmultinomial_cumulant_formula,
)

SUITES = ("identity", "oracle", "moments", "cumulants", "stanley", "demazure", "codes")

# Reference values for the r = 2, N = 4 Demazure character:
# (z-exponent, degree l) -> multiplicity of z^k e^{-l delta}.
WORKED_EXAMPLE_CHARACTER = {
    (4, 4): 1,
    (-4, 4): 1,
    (2, 1): 1, (2, 2): 1, (2, 3): 1, (2, 4): 1,
    (-2, 1): 1, (-2, 2): 1, (-2, 3): 1, (-2, 4): 1,
    (0, 0): 1, (0, 1): 1, (0, 2): 2, (0, 3): 1, (0, 4): 1,
}
WORKED_EXAMPLE_LAURENT = {
    4: QPolynomial([1]),
    -4: QPolynomial([1]),
    2: QPolynomial([1, 1, 1, 1]),
    -2: QPolynomial([1, 1, 1, 1]),
    0: QPolynomial([1, 1, 2, 1, 1]),
}


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    return str(x)


def _record(name: str, params: dict, passed: bool, discrepancy) -> dict:
    return {"check": name, "params": params, "passed": bool(passed), "discrepancy": discrepancy}


def _poly_diff(a: QPolynomial, b: QPolynomial) -> list[int]:
    return (a - b).to_json()


def check_macmahon(N: int, r: int) -> dict:
    dp = galois_number(N, r)
    via = galois_via_macmahon(N, r)
    return _record("macmahon_identity", {"N": N, "r": r}, dp == via, _poly_diff(via, dp))


def check_dp_definition(N: int, r: int) -> dict:
    dp = galois_number(N, r)
    ref = galois_number_by_definition(N, r)
    return _record("galois_dp_vs_definition", {"N": N, "r": r}, dp == ref, _poly_diff(dp, ref))


def check_flags(q: int, N: int, r: int) -> dict:
    brute = count_flags(q, N, r)
    value = poly_eval(galois_number(N, r), q)
    return _record("flag_count", {"q": q, "N": N, "r": r}, brute == value, value - brute)


def check_subspace_dims(q: int, N: int) -> dict:
    by_dim = [0] * (N + 1)
    for v in enumerate_subspaces(q, N):
        by_dim[v.dim] += 1
    expected = [poly_eval(q_binomial(N, k), q) for k in range(N + 1)]
    diff = [e - b for e, b in zip(expected, by_dim)]
    return _record("subspaces_by_dimension", {"q": q, "N": N}, by_dim == expected, diff)


def check_galois_moments(N: int, r: int) -> dict:
    mean, var = galois_mean_var_formula(N, r)
    k = cumulants(distribution_from_polynomial(galois_number(N, r)), 2)
    ok = k[0] == mean and k[1] == var
    return _record("galois_mean_variance", {"N": N, "r": r}, ok, [_fmt(k[0] - mean), _fmt(k[1] - var)])


def check_weighted_sums(N: int, r: int) -> dict:
    diffs = {}
    for s in (1, 2, 3, 4):
        direct = multinomial_weighted_sum_direct(N, r, lambda k, s=s: elementary_symmetric(s, k))
        diffs["e%d" % s] = multinomial_weighted_sums(N, r, s) - direct
    direct = multinomial_weighted_sum_direct(N, r, lambda k: elementary_symmetric(2, k) ** 2)
    diffs["e2sq"] = multinomial_weighted_sums(N, r, "e2sq") - direct
    direct = multinomial_weighted_sum_direct(N, r, lambda k: power_sum(4, k))
    diffs["p4"] = multinomial_weighted_sums(N, r, "p4") - direct
    return _record("weighted_sums", {"N": N, "r": r}, not any(diffs.values()), diffs)


def check_cumulants(N: int, r: int, j_max: int) -> dict:
    bad = []
    for k in compositions(N, r):
        direct = cumulants(distribution_from_polynomial(q_multinomial(N, k)), j_max)
        for j in range(1, j_max + 1):
            formula = qmultinomial_cumulant_formula(k, j)
            if formula != direct[j - 1] or (j >= 3 and j % 2 and formula != 0):
                bad.append({"k": list(k), "j": j, "difference": _fmt(formula - direct[j - 1])})
    return _record("qmultinomial_cumulants", {"N": N, "r": r, "j_max": j_max}, not bad, bad)


def check_stanley(order: int) -> dict:
    report = stanley_identity_check(order)
    cleared = stanley_identity_check_cleared(order)
    bad = [n for n in range(order + 1) if not (report.per_order[n] and cleared[n])]
    return _record("stanley_identity", {"order": order}, not bad, {"failing_orders": bad})


def check_codes(n: int) -> dict:
    num = code_numerator(n)
    g = galois_number(n, 2)
    return _record("code_numerator", {"n": n}, num == g, _poly_diff(num, g))


def check_demazure_moments(N: int, r: int) -> dict:
    mean, var = demazure_gamma_moments(N, r)
    gvar = galois_mean_var_formula(N, r)[1]
    shift_mean = gamma_mean_by_shift(N, r)
    ok = var == gvar and mean == shift_mean
    return _record("demazure_gamma_moments", {"N": N, "r": r}, ok, [_fmt(mean - shift_mean), _fmt(var - gvar)])


def check_demazure_integrality(N_max: int, r_max: int) -> dict:
    bad = []
    for r in range(2, r_max + 1):
        for N in range(N_max + 1):
            try:
                demazure_d(N, r)
            except ArithmeticError:
                bad.append([N, r])
    return _record("demazure_d_integral", {"N_max": N_max, "r_max": r_max}, not bad, bad)


def check_worked_example() -> dict:
    from .qcombi import rogers_szego

    laurent = rogers_szego(4, 2).laurent_r2()
    char = demazure_character_r2(4)
    _, d = demazure_d(4, 2)
    ok = laurent == WORKED_EXAMPLE_LAURENT and char == WORKED_EXAMPLE_CHARACTER and d == 4
    diff = sorted(set(char.items()) ^ set(WORKED_EXAMPLE_CHARACTER.items()))
    return _record("demazure_worked_example", {"N": 4, "r": 2}, ok, [[z, l, m] for (z, l), m in diff])


def suite_tasks(suite: str, N_max: int | None = None, r_max: int | None = None, q: list[int] | None = None, order: int | None = None) -> list[tuple[Callable, tuple]]:
    if suite == "identity":
        N_max = 9 if N_max is None else N_max
        r_max = 6 if r_max is None else r_max
        tasks = [(check_macmahon, (N, r)) for N in range(N_max + 1) for r in range(2, r_max + 1)]
        tasks += [(check_dp_definition, (N, r)) for N in range(min(N_max, 12) + 1) for r in range(1, min(r_max, 5) + 1)]
        return tasks
    if suite == "oracle":
        N_max = 4 if N_max is None else N_max
        r_max = 4 if r_max is None else r_max
        qs = q or [2, 3]
        tasks = [(check_flags, (qq, N, r)) for qq in qs for N in range(N_max + 1) for r in range(1, r_max + 1)]
        tasks += [(check_subspace_dims, (qq, N)) for qq in qs for N in range(N_max + 1)]
        return tasks
    if suite == "moments":
        N_max = 20 if N_max is None else N_max
        r_max = 5 if r_max is None else r_max
        tasks = [(check_galois_moments, (N, r)) for N in range(N_max + 1) for r in range(2, r_max + 1)]
        tasks += [(check_weighted_sums, (N, r)) for N in range(min(N_max, 10) + 1) for r in range(1, min(r_max, 4) + 1)]
        return tasks
    if suite == "cumulants":
        N_max = 12 if N_max is None else N_max
        r_max = 4 if r_max is None else r_max
        return [(check_cumulants, (N, r, 6)) for N in range(N_max + 1) for r in range(1, r_max + 1)]
    if suite == "stanley":
        return [(check_stanley, (7 if order is None else order,))]
    if suite == "demazure":
        N_max = 20 if N_max is None else N_max
        r_max = 5 if r_max is None else r_max
        tasks = [(check_demazure_moments, (N, r)) for N in range(N_max + 1) for r in range(2, r_max + 1)]
        tasks += [(check_demazure_integrality, (max(60, N_max), max(12, r_max))), (check_worked_example, ())]
        return tasks
    if suite == "codes":
        N_max = 9 if N_max is None else N_max
        return [(check_codes, (n,)) for n in range(1, N_max + 1)]
    raise ValueError("unknown suite %r" % suite)


def _call(task):
    fn, args = task
    return fn(*args)


def run_suite(suite: str, jobs: int = 1, **params) -> dict:
    tasks = suite_tasks(suite, **params)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(_call, tasks))
    else:
        checks = [_call(t) for t in tasks]
    return {
        "suite": suite,
        "passed": all(c["passed"] for c in checks),
        "n_checks": len(checks),
        "n_failed": sum(not c["passed"] for c in checks),
        "checks": checks,
    }
