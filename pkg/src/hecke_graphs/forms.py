"""Unramified automorphic forms as functions on ``c_0, c_1, ...``.

Two scalar modes are supported: ``"exact"`` (``fractions.Fraction``, no
rounding anywhere) and ``"complex"`` (Python complex numbers, with a
tolerance used only when deciding numerical rank).

On the projective line every vertex is some ``c_D`` with ``D`` effective and
``m_X = max(2g - 2, 0) = 0``, so both the cuspidal and the toroidal
conditions collapse to conditions at the single vertex ``c_0``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .finite_field import FieldSpec
from .hecke_graph import HeckeGraph, WindowError, operator_graph
from .linalg import nullspace_complex, nullspace_exact

# max(2 * genus - 2, 0) for the projective line
M_X = 0

MODES = ("exact", "complex")


def to_scalar(value, mode: str = "exact"):
    if mode == "exact":
        if isinstance(value, complex):
            raise TypeError("complex value in exact mode")
        return Fraction(value)
    if mode == "complex":
        if isinstance(value, Fraction):
            return complex(float(value))
        return complex(value)
    raise ValueError(f"unknown scalar mode {mode!r}")


@dataclass(frozen=True)
class CuspFunction:
    """Values at ``c_0 .. c_window``."""

    window: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.window + 1:
            raise ValueError("need exactly window + 1 values")

    def __getitem__(self, n: int):
        return self.values[n]

    def is_multiple_of(self, other: "CuspFunction", tol: float | None = None) -> bool:
        """True if the two functions span the same line (or are both zero)."""
        pivot = next((i for i, v in enumerate(other.values) if _nonzero(v, tol)), None)
        if pivot is None:
            return not any(_nonzero(v, tol) for v in self.values)
        ratio = self.values[pivot] / other.values[pivot]
        return all(not _nonzero(a - ratio * b, tol) for a, b in zip(self.values, other.values))

    def to_json(self) -> list:
        return [_scalar_json(v) for v in self.values]


def _nonzero(v, tol):
    return v != 0 if tol is None else abs(v) > tol


def _scalar_json(v):
    if isinstance(v, Fraction):
        return {"num": str(v.numerator), "den": str(v.denominator)}
    return {"re": v.real, "im": v.imag}


def extend_along_cusp(lam, f0, f1, q_x: int, window: int, mode: str = "exact") -> CuspFunction:
    """Continue ``f(c_(i+1)) = lam f(c_i) - q_x f(c_(i-1))`` out to ``c_window``."""
    if window < 1:
        raise ValueError("window must be >= 1")
    lam, f0, f1 = (to_scalar(x, mode) for x in (lam, f0, f1))
    vals = [f0, f1]
    for _ in range(1, window):
        vals.append(lam * vals[-1] - q_x * vals[-2])
    return CuspFunction(window, tuple(vals))


def eigen_rows(g: HeckeGraph, lam, mode: str = "exact") -> list[list]:
    """Rows of ``(M - lam) f = 0`` at every vertex whose neighbours lie in the window."""
    lam = to_scalar(lam, mode)
    zero = to_scalar(0, mode)
    n = g.window + 1
    rows = []
    for v in range(g.window - g.reach + 1):
        row = [zero] * n
        for t, m in g.out[v].items():
            row[t] += m
        row[v] -= lam
        rows.append(row)
    return rows


def eigenfunction_on_graph(g: HeckeGraph, lam, mode: str = "exact",
                           tol: float = 1e-10) -> list[CuspFunction]:
    """Basis of the functions on the window satisfying the eigenvalue equations."""
    if g.window < 2 * g.reach:
        raise WindowError(f"window {g.window} < 2 * reach = {2 * g.reach}")
    rows = eigen_rows(g, lam, mode)
    n = g.window + 1
    if mode == "exact":
        basis = nullspace_exact(rows, n)
    else:
        basis = [list(map(complex, v)) for v in nullspace_complex(rows, n, tol)]
    return [CuspFunction(g.window, tuple(v)) for v in basis]


def is_eigenfunction(g: HeckeGraph, f: Sequence, lam, tol: float | None = None) -> bool:
    """Check ``sum m f(t) == lam f(v)`` at every vertex with all neighbours known."""
    for v in range(min(g.window, len(f) - 1 - g.reach) + 1):
        total = sum(m * f[t] for t, m in g.out[v].items())
        if _nonzero(total - lam * f[v], tol):
            return False
    return True


def eisenstein_eigenvalue(t, q_x: int, mode: str = "complex"):
    """``sqrt(q_x) * (t + 1/t)`` where ``t`` is the character value at the uniformizer.

    Exact mode works only when ``q_x`` is a perfect square.
    """
    if t == 0:
        raise ZeroDivisionError("character value must be nonzero")
    if mode == "complex":
        t = complex(t)
        return cmath.sqrt(q_x) * (t + 1 / t)
    if mode == "exact":
        r = math.isqrt(q_x)
        if r * r != q_x:
            raise ValueError(f"sqrt({q_x}) is irrational; use complex mode")
        t = Fraction(t)
        return r * (t + 1 / t)
    raise ValueError(f"unknown scalar mode {mode!r}")


# -- cuspidal and toroidal conditions -----------------------------------------

def effective_degree_multisets(max_degree: int, place_degrees: Iterable[int] = (1,)) -> list[tuple[int, ...]]:
    """Degree multisets of effective divisors built from places of the given degrees.

    The graph of ``Phi_D`` depends only on the degrees of the places in ``D``,
    so these multisets index all distinct condition operators.  The empty
    tuple is the zero divisor.
    """
    parts = sorted(set(place_degrees))
    if any(p < 1 for p in parts):
        raise ValueError("place degrees must be >= 1")
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], start: int, total: int):
        out.append(tuple(prefix))
        for i in range(start, len(parts)):
            if total + parts[i] <= max_degree:
                prefix.append(parts[i])
                rec(prefix, i, total + parts[i])
                prefix.pop()

    rec([], 0, 0)
    return sorted(out, key=lambda t: (sum(t), t))


@dataclass
class Condition:
    """One linear condition ``sum coeffs[n] f(c_n) = 0`` from the operator ``Phi_D``."""

    degrees: tuple[int, ...]
    coeffs: dict[int, int | Fraction]

    @property
    def degree(self) -> int:
        return sum(self.degrees)


def condition_at_base(field: FieldSpec, degrees: tuple[int, ...], window: int) -> Condition:
    """``Phi_D(f)(c_0)`` as a linear form in the values of ``f``."""
    g = operator_graph(field, degrees, window)
    return Condition(tuple(degrees), dict(g.out[0]))


@dataclass
class SpaceResult:
    dimension: int
    basis: list[CuspFunction]
    unknowns: list[int]
    conditions: list[Condition] = field(default_factory=list)
    induction: list[tuple[int, Fraction]] = field(default_factory=list)


def _check_window(max_degree: int, window: int) -> None:
    if max_degree < 0:
        raise ValueError("max degree must be >= 0")
    if window < 2 * max_degree:
        raise WindowError(
            f"window {window} < max_degree + reach = {2 * max_degree}; refusing to under-constrain")


def _conditions(field: FieldSpec, max_degree: int, window: int,
                place_degrees: Iterable[int]) -> list[Condition]:
    return [condition_at_base(field, ds, window - sum(ds))
            for ds in effective_degree_multisets(max_degree, place_degrees)]


def _solve(conditions: list[Condition], unknowns: list[int], window: int) -> list[CuspFunction]:
    col = {n: i for i, n in enumerate(unknowns)}
    rows = [[Fraction(c.coeffs.get(n, 0)) for n in unknowns] for c in conditions]
    basis = []
    for v in nullspace_exact(rows, len(unknowns)):
        vals = [Fraction(0)] * (window + 1)
        for n, i in col.items():
            vals[n] = v[i]
        basis.append(CuspFunction(window, tuple(vals)))
    return basis


def cusp_space_dim(field: FieldSpec, max_degree: int, window: int,
                   support: Iterable[int] | None = None,
                   place_degrees: Iterable[int] = (1,)) -> SpaceResult:
    """Functions supported on ``support`` (default ``c_n, n <= M_X``) with vanishing constant terms.

    On P^1 the extensions of the trivial bundle by itself reduce to ``c_0``,
    so the condition for ``Phi_D`` is ``Phi_D(f)(c_0) = 0``; for ``D = 0`` it
    reads ``f(c_0) = 0``.
    """
    _check_window(max_degree, window)
    unknowns = sorted(set(range(M_X + 1) if support is None else support))
    if any(not 0 <= n <= window for n in unknowns):
        raise WindowError("support must lie in the window")
    conds = _conditions(field, max_degree, window, place_degrees)
    basis = _solve(conds, unknowns, window)
    return SpaceResult(len(basis), basis, unknowns, conds)


def toroidal_space_dim(field: FieldSpec, max_degree: int, window: int,
                       place_degrees: Iterable[int] = (1,),
                       scale: Fraction | int = 1) -> SpaceResult:
    """Functions on ``c_0 .. c_max_degree`` whose torus periods vanish.

    On P^1 the only trace class is ``c_0``, and the toroidal condition for
    ``Phi_D`` is ``Phi_D(f)(c_0) = 0`` (up to a nonzero constant, which
    drops out; ``scale`` multiplies every condition to exercise this).  The condition of degree ``d`` contains ``f(c_d)`` with
    coefficient ``q + 1`` and otherwise only lower vertices, so the values are
    forced one degree at a time starting from ``f(c_0) = 0``; ``induction``
    records the leading coefficient used at each step.
    """
    _check_window(max_degree, window)
    if scale == 0:
        raise ValueError("scale must be nonzero")
    conds = [Condition(c.degrees, {n: m * scale for n, m in c.coeffs.items()})
             for c in _conditions(field, max_degree, window, place_degrees)]
    unknowns = list(range(max_degree + 1))
    values = [Fraction(0)] * (max_degree + 1)
    induction = []
    for d in unknowns:
        lead = next(c for c in conds if c.degree == d)
        if any(n > d for n in lead.coeffs):
            raise ArithmeticError(f"condition of degree {d} reaches beyond c_{d}")
        a = lead.coeffs.get(d, 0)
        if a == 0:
            raise ArithmeticError(f"condition of degree {d} does not involve c_{d}")
        values[d] = -sum(Fraction(m) * values[n] for n, m in lead.coeffs.items() if n != d) / a
        induction.append((d, Fraction(a)))
    if any(values):
        raise ArithmeticError("induction produced a nonzero value from f(c_0) = 0")
    basis = _solve(conds, unknowns, window)
    return SpaceResult(len(basis), basis, unknowns, conds, induction)
