# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; mirrors ``_pure_kernels``."""

from libc.stdlib cimport malloc, calloc, free


def descent_inv_counts(start, Py_ssize_t fixed=0):
    cdef Py_ssize_t n = len(start)
    if sorted(start) != list(range(1, n + 1)):
        raise ValueError("start must be a permutation of 1..n")
    if fixed < 0 or fixed > n:
        raise ValueError("fixed prefix out of range")
    cdef Py_ssize_t rows = n if n > 0 else 1
    cdef Py_ssize_t cols = n * (n - 1) // 2 + 1
    cdef Py_ssize_t m = n - fixed
    cdef long long *counts = <long long *> calloc(rows * cols, sizeof(long long))
    cdef int *a = <int *> malloc((n + 1) * sizeof(int))
    cdef int *c = <int *> calloc(m + 1, sizeof(int))
    cdef int *o = <int *> malloc((m + 1) * sizeof(int))
    if counts == NULL or a == NULL or c == NULL or o == NULL:
        free(counts); free(a); free(c); free(o)
        raise MemoryError()
    cdef Py_ssize_t i, k, j, s, q, p1, p2
    cdef long long inv = 0
    cdef long long des = 0
    cdef int x, y
    try:
        for i in range(n):
            a[i] = start[i]
        for i in range(m + 1):
            o[i] = 1
        for i in range(n):
            for k in range(i + 1, n):
                if a[i] > a[k]:
                    inv += 1
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                des += 1
        if m <= 1:
            counts[des * cols + inv] += 1
        else:
            while True:
                counts[des * cols + inv] += 1
                j = m
                s = 0
                while True:
                    q = c[j] + o[j]
                    if q < 0:
                        o[j] = -o[j]
                        j -= 1
                    elif q == j:
                        if j == 1:
                            break
                        s += 1
                        o[j] = -o[j]
                        j -= 1
                    else:
                        break
                if q == j and j == 1:
                    break
                p1 = j - c[j] + s
                p2 = j - q + s
                i = fixed + (p1 if p1 < p2 else p2) - 1
                x = a[i]
                y = a[i + 1]
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
                a[i] = y
                a[i + 1] = x
                c[j] = q
        return [[counts[i * cols + k] for k in range(cols)] for i in range(rows)]
    finally:
        free(counts)
        free(a)
        free(c)
        free(o)
