"""Small dense linear algebra: exact over the rationals, approximate over C."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns ``(rows, pivot_columns)``."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace_exact(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``, one vector per free column, free entry 1."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[fc]
        basis.append(x)
    return basis


def nullspace_complex(rows: Sequence[Sequence], ncols: int, tol: float) -> list[np.ndarray]:
    """Orthonormal basis of the numerical kernel; singular values <= tol count as zero."""
    if not rows:
        return [v for v in np.eye(ncols, dtype=complex)]
    a = np.asarray(rows, dtype=complex)
    _, sv, vh = np.linalg.svd(a)
    rank = int(np.sum(sv > tol))
    return [vh[i].conj() for i in range(rank, ncols)]
