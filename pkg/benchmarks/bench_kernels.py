"""Time the compiled and pure-Python (des, inv) enumeration kernels.

    python3 benchmarks/bench_kernels.py --N 7 8 9 10 --repeat 3
"""

import argparse
import sys
import time

from galois_lab import _pure_kernels

try:
    from galois_lab import _kernels
except ImportError:
    _kernels = None


def best_time(fn, start, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(start)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, nargs="+", default=[6, 7, 8, 9])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--pure-max", type=int, default=10, help="skip the pure kernel above this N")
    args = ap.parse_args(argv)

    if _kernels is None:
        print("compiled kernel not built; timing the pure kernel only", file=sys.stderr)
    print("%4s %12s %12s %9s" % ("N", "cython_s", "python_s", "speedup"))
    for N in args.N:
        start = list(range(1, N + 1))
        fast = slow = None
        if _kernels is not None:
            fast, res_fast = best_time(_kernels.descent_inv_counts, start, args.repeat)
        if N <= args.pure_max:
            slow, res_slow = best_time(_pure_kernels.descent_inv_counts, start, 1 if N >= 9 else args.repeat)
            if fast is not None and res_fast != res_slow:
                raise SystemExit("kernels disagree at N=%d" % N)
        ratio = "%.1fx" % (slow / fast) if fast and slow else "-"
        print(
            "%4d %12s %12s %9s"
            % (N, "%.4f" % fast if fast is not None else "-", "%.4f" % slow if slow is not None else "-", ratio)
        )


if __name__ == "__main__":
    main()
