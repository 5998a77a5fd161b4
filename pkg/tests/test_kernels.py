from itertools import permutations

import pytest

from galois_lab import _pure_kernels, kernels

try:
    from galois_lab import _kernels
except ImportError:  # extension not built
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled kernel not built")


def brute_counts(start, fixed=0):
    n = len(start)
    counts = [[0] * (n * (n - 1) // 2 + 1) for _ in range(max(n, 1))]
    for tail in permutations(start[fixed:]):
        p = list(start[:fixed]) + list(tail)
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        des = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
        counts[des][inv] += 1
    return counts


@pytest.mark.parametrize("n", range(0, 8))
def test_pure_kernel_matches_brute_force(n):
    start = list(range(1, n + 1))
    assert _pure_kernels.descent_inv_counts(start) == brute_counts(start)


@pytest.mark.parametrize("start,fixed", [([3, 1, 2, 4, 5], 1), ([2, 5, 1, 3, 4, 6], 2), ([4, 3, 2, 1], 0), ([1], 1)])
def test_pure_kernel_with_prefix(start, fixed):
    assert _pure_kernels.descent_inv_counts(start, fixed) == brute_counts(start, fixed)


@needs_ext
@pytest.mark.parametrize("n", range(0, 10))
def test_compiled_kernel_matches_pure(n):
    start = list(range(1, n + 1))
    assert _kernels.descent_inv_counts(start) == _pure_kernels.descent_inv_counts(start)


@needs_ext
@pytest.mark.parametrize("start,fixed", [([3, 1, 2, 4, 5], 1), ([6, 2, 5, 1, 3, 4, 7], 1), ([2, 1, 3], 3)])
def test_compiled_kernel_with_prefix(start, fixed):
    assert _kernels.descent_inv_counts(start, fixed) == brute_counts(start, fixed)


@pytest.mark.parametrize("impl", [_pure_kernels.descent_inv_counts] + ([_kernels.descent_inv_counts] if _kernels else []))
def test_kernel_rejects_bad_input(impl):
    with pytest.raises(ValueError):
        impl([1, 1, 2])
    with pytest.raises(ValueError):
        impl([1, 2], 5)


def test_backend_selected():
    import os

    assert kernels.BACKEND in ("cython", "python")
    if _kernels is not None and os.environ.get("GALOIS_LAB_PURE") != "1":
        assert kernels.BACKEND == "cython"


def test_pure_fallback_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, GALOIS_LAB_PURE="1")
    code = "from galois_lab import kernels, permstat; print(kernels.BACKEND, permstat.descent_inv_table(5).eulerian())"
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.split()[0] == "python"
    assert "[1, 26, 66, 26, 1]" in proc.stdout


def test_benchmark_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    bench.main(["--N", "4", "5", "--repeat", "1"])
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["N", "cython_s", "python_s", "speedup"]
    assert len(out) == 3
