# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernels; see ``_kernels_py.py`` for the reference version."""

from libc.stdlib cimport malloc, calloc, free


cdef long _reduce_state(long n, int* b, int* t,
                        const int[:, ::1] add, const int[:, ::1] mul,
                        const int[::1] neg, const int[::1] inv) noexcept nogil:
    # b holds the coefficients of pi^1 .. pi^(n-1); t is scratch of length >= n
    cdef long i0, k, nn, j, i, slen, length, hi
    cdef int acc, s0inv, m, si, tj
    while True:
        if n <= 1:
            return -n if n < 0 else n
        i0 = 0
        while i0 < n - 1 and b[i0] == 0:
            i0 += 1
        if i0 == n - 1:
            return n
        k = i0 + 1
        nn = n - 2 * k
        if nn <= 1:
            return -nn if nn < 0 else nn
        slen = n - k
        length = nn + k
        s0inv = inv[b[i0]]
        m = neg[s0inv]
        t[0] = s0inv
        for j in range(1, length):
            acc = 0
            hi = j if j < slen - 1 else slen - 1
            for i in range(1, hi + 1):
                si = b[i0 + i]
                tj = t[j - i]
                if si != 0 and tj != 0:
                    acc = add[acc, mul[si, tj]]
            t[j] = mul[m, acc]
        for j in range(nn - 1):
            b[j] = t[k + 1 + j]
        n = nn


def reduce_dense(long n, coeffs, long low,
                 const int[:, ::1] add, const int[:, ::1] mul,
                 const int[::1] neg, const int[::1] inv):
    """Vertex of ``(pi^n, sum coeffs[j] pi^(low+j); 0, 1)``."""
    cdef long j, deg, res
    if n <= 1:
        return -n if n < 0 else n
    cdef int* b = <int*> calloc(n, sizeof(int))
    cdef int* t = <int*> calloc(n, sizeof(int))
    if b == NULL or t == NULL:
        free(b)
        free(t)
        raise MemoryError()
    try:
        for j, c in enumerate(coeffs):
            deg = low + j
            if 1 <= deg < n:
                b[deg - 1] = c
        with nogil:
            res = _reduce_state(n, b, t, add, mul, neg, inv)
    finally:
        free(b)
        free(t)
    return res


def phi_tally(long n, long d, long q,
              const int[:, ::1] add, const int[:, ::1] mul,
              const int[::1] neg, const int[::1] inv):
    """Multiplicities of the vertices reached from ``c_n`` by the degree-``d`` cosets."""
    cdef long n0 = d - n
    cdef long top = d if d < n0 else n0
    cdef long size = n + d + 1
    cdef long width = n0 if n0 > 1 else 1
    cdef long long total = 1, it
    cdef long i, deg, v
    for i in range(d):
        total *= q
    cdef long long* counts = <long long*> calloc(size, sizeof(long long))
    cdef int* digits = <int*> calloc(d if d > 0 else 1, sizeof(int))
    cdef int* b = <int*> calloc(width, sizeof(int))
    cdef int* t = <int*> calloc(width, sizeof(int))
    if counts == NULL or digits == NULL or b == NULL or t == NULL:
        free(counts); free(digits); free(b); free(t)
        raise MemoryError()
    try:
        with nogil:
            counts[n + d] += 1
            for it in range(total):
                if n0 <= 1:
                    v = -n0 if n0 < 0 else n0
                else:
                    for deg in range(n0 - 1):
                        b[deg] = 0
                    for deg in range(1, top):
                        b[deg - 1] = digits[deg]
                    v = _reduce_state(n0, b, t, add, mul, neg, inv)
                counts[v] += 1
                i = 0
                while i < d:
                    digits[i] += 1
                    if digits[i] < q:
                        break
                    digits[i] = 0
                    i += 1
        out = {}
        for i in range(size):
            if counts[i]:
                out[i] = counts[i]
    finally:
        free(counts); free(digits); free(b); free(t)
    return out
