"""Standard representatives for Gamma \\ GL_2(F_x) / K_x Z_x over F_q(T).

Here ``x`` is a degree-one place with uniformizer ``pi``, ``Gamma`` is
``GL_2`` of the polynomials in ``pi^-1`` and ``K_x = GL_2(F_q[[pi]])``.
Every class contains exactly one ``p_n = diag(pi^-n, 1)`` with ``n >= 0``;
:func:`reduce` finds that ``n`` by the following moves on a representative:

1. column operations in ``K_x`` make the matrix upper triangular;
2. scaling by the centre and by diagonal units gives ``(pi^n, b; 0, 1)``;
3. terms of ``b`` of degree ``>= n`` are cleared on the right by ``K_x``;
4. terms of degree ``<= 0`` are cleared on the left by ``Gamma``;
5. if what is left is ``b = s pi^k`` (``s`` a unit, ``1 <= k < n``), the
   class also contains ``(pi^(n-2k), s^-1 pi^-k; 0, 1)``; go back to 3;
6. once ``b = 0`` the class is ``p_|n|``.

Move 5 lowers ``n`` by at least two, so the loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finite_field import FieldSpec, FqElem, ProjPoint
from .laurent import LaurentPoly, inverse_mod, lp_mul, unit_factor, valuation, window


class ReductionError(RuntimeError):
    """Internal failure of the reduction loop (should never happen)."""


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix ``(a b; c d)`` with Laurent polynomial entries."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    @classmethod
    def of(cls, field: FieldSpec, a, b, c, d) -> "Mat2":
        def conv(x):
            if isinstance(x, LaurentPoly):
                return x
            return LaurentPoly.constant(field, x)

        return cls(conv(a), conv(b), conv(c), conv(d))

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, t: LaurentPoly) -> "Mat2":
        return Mat2(self.a * t, self.b * t, self.c * t, self.d * t)

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.a, self.b, self.c, self.d)

    def min_valuation(self) -> int:
        return min(e.min_degree() for e in self.entries() if e)


# -- special matrices ---------------------------------------------------------

def monomial(field: FieldSpec, deg: int) -> LaurentPoly:
    return LaurentPoly.monomial(field, deg)


def p_matrix(field: FieldSpec, n: int) -> Mat2:
    """Standard representative ``p_n = diag(pi^-n, 1)``."""
    return Mat2.of(field, monomial(field, -n), 0, 0, 1)


def xi_matrix(field: FieldSpec, w: ProjPoint) -> Mat2:
    """``(pi, b; 0, 1)`` for ``w = [1:b]`` and ``diag(1, pi)`` for ``w = [0:1]``."""
    if w.is_infinity:
        return Mat2.of(field, 1, 0, 0, monomial(field, 1))
    return Mat2.of(field, monomial(field, 1), FqElem(field, w.b), 0, 1)


def coset_matrix(field: FieldSpec, digits: tuple[int, ...]) -> Mat2:
    """``(pi^d, b_0 + b_1 pi + ... + b_{d-1} pi^{d-1}; 0, 1)`` with ``d = len(digits)``."""
    d = len(digits)
    return Mat2.of(field, monomial(field, d), LaurentPoly.from_list(field, digits), 0, 1)


def lower_coset_matrix(field: FieldSpec, d: int) -> Mat2:
    """``diag(1, pi^d)``."""
    return Mat2.of(field, 1, 0, 0, monomial(field, d))


# -- reduction ----------------------------------------------------------------

def _check_invertible(M: Mat2) -> LaurentPoly:
    det = M.det()
    if det.is_zero():
        raise ValueError("singular matrix")
    return det


def iwasawa(M: Mat2) -> Mat2:
    """An upper triangular matrix in the same right ``K_x`` class as ``M``.

    The column clearing ``c - t*d`` uses a truncated quotient ``t``; the
    leftover lower-left term has valuation at least
    ``1 + v(det) - (least entry valuation)``, which makes discarding it a
    right multiplication by an element of ``K_x``.
    """
    _check_invertible(M)
    a, b, c, d = M.entries()
    if c.is_zero():
        return M
    if d.is_zero() or valuation(c) < valuation(d):
        a, b, c, d = b, a, d, c
    vd, u = unit_factor(d)
    rest = [e for e in (a, b, d) if e]
    mu = min(e.min_degree() for e in rest)
    vdet = valuation(_check_invertible(Mat2(a, b, c, d)))
    prec = max(1, 1 + vdet - mu - vd)
    c_shift = c.shift(-vd)
    # t = c/d = (c pi^-vd) * u^-1, with v(t) >= 0; keep degrees < prec
    t = window(lp_mul(c_shift, window(inverse_mod(u, prec).to_poly(), 0, prec)), 0, prec)
    new_a = a - t * b
    residual = c - t * d
    if residual and valuation(residual) < vd + prec:
        raise ReductionError("column clearing did not reach the required precision")
    return Mat2(new_a, b, LaurentPoly.zero(M.field), d)


def normalize_upper(M: Mat2) -> tuple[int, LaurentPoly]:
    """For upper triangular ``M`` return ``(n, b)`` with ``M ~ (pi^n, b; 0, 1)``.

    Only the degrees ``1 <= i < n`` of ``b`` are meaningful (the rest is
    cleared by moves 3 and 4), and only those are returned.
    """
    a, b, c, d = M.entries()
    if c:
        raise ValueError("matrix is not upper triangular")
    if a.is_zero() or d.is_zero():
        raise ValueError("singular matrix")
    va, _ = unit_factor(a)
    e, u = unit_factor(d)
    n = va - e
    if n <= 1 or b.is_zero():
        return n, LaurentPoly.zero(M.field)
    # b/d = b * u^-1 * pi^-e, needed below degree n
    prec = n + e - valuation(b)
    if prec <= 0:
        return n, LaurentPoly.zero(M.field)
    b_over_d = lp_mul(b, inverse_mod(u, prec).to_poly()).shift(-e)
    return n, window(b_over_d, 1, n)


def reduce_upper(n: int, b: LaurentPoly) -> int:
    """Vertex index of ``(pi^n, b; 0, 1)``."""
    b = window(b, 1, n)
    cap = max(n, 0) // 2 + 2
    steps = 0
    while b:
        steps += 1
        if steps > cap:
            raise ReductionError(f"reduction loop exceeded {cap} steps")
        k, s = unit_factor(b)
        if not 1 <= k < n:
            raise ReductionError(f"unexpected exponent k={k} for n={n}")
        n_new = n - 2 * k
        if n_new <= 1:
            b = LaurentPoly.zero(b.field)
        else:
            b = window(inverse_mod(s, n_new + k).to_poly().shift(-k), 1, n_new)
        n = n_new
    return abs(n)


def reduce(M: Mat2) -> int:
    """The ``n >= 0`` with ``M`` in ``Gamma p_n Z_x K_x``."""
    n, b = normalize_upper(iwasawa(M))
    return reduce_upper(n, b)
