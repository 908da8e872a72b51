"""Pure-Python reduction kernels on dense coefficient arrays.

Mirrors ``_ckernels.pyx`` line for line; used when the extension is not built
or when ``HECKE_GRAPHS_PURE_PYTHON`` is set.  Field arithmetic goes through
the lookup tables of a ``FieldSpec`` (``add[a][b]``, ``mul[a][b]``, ``neg[a]``,
``inv[a]``).
"""

from __future__ import annotations


def _reduce_state(n, b, add, mul, neg, inv):
    # b[i] is the coefficient of pi^(i+1), len(b) == n - 1
    while True:
        if n <= 1:
            return abs(n)
        i0 = 0
        while i0 < n - 1 and b[i0] == 0:
            i0 += 1
        if i0 == n - 1:
            return n
        k = i0 + 1
        nn = n - 2 * k
        if nn <= 1:
            return abs(nn)
        slen = n - k
        length = nn + k
        s0inv = inv[b[i0]]
        m = neg[s0inv]
        t = [0] * length
        t[0] = s0inv
        for j in range(1, length):
            acc = 0
            for i in range(1, min(j, slen - 1) + 1):
                si = b[i0 + i]
                tj = t[j - i]
                if si and tj:
                    acc = add[acc][mul[si][tj]]
            t[j] = mul[m][acc]
        b = t[k + 1:k + nn]
        n = nn


def reduce_dense(n, coeffs, low, add, mul, neg, inv):
    """Vertex of ``(pi^n, sum coeffs[j] pi^(low+j); 0, 1)``."""
    if n <= 1:
        return abs(n)
    b = [0] * (n - 1)
    for j, c in enumerate(coeffs):
        deg = low + j
        if 1 <= deg < n:
            b[deg - 1] = c
    return _reduce_state(n, b, add, mul, neg, inv)


def phi_tally(n, d, q, add, mul, neg, inv):
    """Multiplicities of the vertices reached from ``c_n`` by the degree-``d`` cosets.

    Enumerates all ``q**d`` matrices ``(pi^d, b_0 + ... + b_{d-1} pi^{d-1}; 0, 1) p_n
    = (pi^(d-n), b; 0, 1)`` plus ``diag(1, pi^d) p_n ~ p_(n+d)``.
    """
    counts = {n + d: 1}
    n0 = d - n
    top = min(d, n0)
    digits = [0] * d
    for _ in range(q**d):
        if n0 <= 1:
            v = abs(n0)
        else:
            b = [0] * (n0 - 1)
            for deg in range(1, top):
                b[deg - 1] = digits[deg]
            v = _reduce_state(n0, b, add, mul, neg, inv)
        counts[v] = counts.get(v, 0) + 1
        # odometer
        i = 0
        while i < d:
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
            i += 1
    return counts
