"""Pure-Python enumeration kernel; same algorithm and output as the
compiled ``_kernels`` module."""

from __future__ import annotations

from typing import Sequence


def _initial_stats(a: Sequence[int]) -> tuple[int, int]:
    n = len(a)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])
    des = sum(1 for i in range(n - 1) if a[i] > a[i + 1])
    return inv, des


def descent_inv_counts(start: Sequence[int], fixed: int = 0) -> list[list[int]]:
    """Count permutations by (des, inv) over all rearrangements of
    ``start[fixed:]`` with the prefix ``start[:fixed]`` held in place.

    Returns ``counts[des][inv]`` with ``max(n, 1)`` rows and
    ``n(n-1)/2 + 1`` columns. Plain changes (Knuth, Algorithm 7.2.1.2P)
    move one adjacent pair per step, so both statistics update in O(1).
    """
    a = list(start)
    n = len(a)
    if sorted(a) != list(range(1, n + 1)):
        raise ValueError("start must be a permutation of 1..n")
    if not 0 <= fixed <= n:
        raise ValueError("fixed prefix out of range")
    counts = [[0] * (n * (n - 1) // 2 + 1) for _ in range(max(n, 1))]
    inv, des = _initial_stats(a)
    m = n - fixed
    if m <= 1:
        counts[des][inv] += 1
        return counts
    c = [0] * (m + 1)
    o = [1] * (m + 1)
    while True:
        counts[des][inv] += 1
        j = m
        s = 0
        while True:
            q = c[j] + o[j]
            if q < 0:
                o[j] = -o[j]
                j -= 1
            elif q == j:
                if j == 1:
                    return counts
                s += 1
                o[j] = -o[j]
                j -= 1
            else:
                break
        p1 = j - c[j] + s
        p2 = j - q + s
        i = fixed + min(p1, p2) - 1
        x, y = a[i], a[i + 1]
        if i > 0:
            des -= a[i - 1] > x
            des += a[i - 1] > y
        if i + 2 < n:
            des -= y > a[i + 2]
            des += x > a[i + 2]
        if x < y:
            inv += 1
            des += 1
        else:
            inv -= 1
            des -= 1
        a[i], a[i + 1] = y, x
        c[j] = q
