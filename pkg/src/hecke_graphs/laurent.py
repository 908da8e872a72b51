"""Exact Laurent polynomials over F_q and precision-tracked truncated series.

A :class:`LaurentPoly` is a finite sum ``sum c_i pi^i`` with ``i`` of either
sign.  Coefficients are held as element indices of the owning
:class:`~hecke_graphs.finite_field.FieldSpec`; zero coefficients are never
stored.  The only infinite objects the reduction algorithm needs are inverses
of units, which :func:`inverse_mod` produces to an explicit precision.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .finite_field import FieldSpec, FqElem


class LaurentPoly:
    __slots__ = ("field", "_c")

    def __init__(self, field: FieldSpec, coeffs: Mapping[int, int | FqElem] | None = None):
        self.field = field
        c: dict[int, int] = {}
        if coeffs:
            for deg, val in coeffs.items():
                idx = FqElem.coerce(field, val).index
                if idx:
                    c[int(deg)] = idx
        self._c = c

    @classmethod
    def _raw(cls, field: FieldSpec, c: dict[int, int]) -> "LaurentPoly":
        # c must already be canonical (no zero values)
        obj = cls.__new__(cls)
        obj.field = field
        obj._c = c
        return obj

    @classmethod
    def zero(cls, field: FieldSpec) -> "LaurentPoly":
        return cls._raw(field, {})

    @classmethod
    def constant(cls, field: FieldSpec, value=1) -> "LaurentPoly":
        return cls(field, {0: value})

    @classmethod
    def monomial(cls, field: FieldSpec, deg: int, value=1) -> "LaurentPoly":
        return cls(field, {deg: value})

    @classmethod
    def from_list(cls, field: FieldSpec, coeffs: Iterable, start: int = 0) -> "LaurentPoly":
        """Coefficients of degrees ``start, start+1, ...``."""
        return cls(field, {start + i: c for i, c in enumerate(coeffs)})

    # -- inspection -----------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Degree -> element index, nonzero entries only (a copy)."""
        return dict(self._c)

    def __getitem__(self, deg: int) -> FqElem:
        return FqElem(self.field, self._c.get(deg, 0))

    def degrees(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.field == other.field and self._c == other._c
        if isinstance(other, (int, FqElem)):
            return self == LaurentPoly.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, frozenset(self._c.items())))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        return lp_add(self, _as_poly(self.field, other))

    __radd__ = __add__

    def __neg__(self):
        return lp_neg(self)

    def __sub__(self, other):
        return lp_add(self, lp_neg(_as_poly(self.field, other)))

    def __rsub__(self, other):
        return lp_add(_as_poly(self.field, other), lp_neg(self))

    def __mul__(self, other):
        return lp_mul(self, _as_poly(self.field, other))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``pi**k``."""
        return LaurentPoly._raw(self.field, {d + k: v for d, v in self._c.items()})

    def to_json(self) -> dict:
        return {"coeffs": {str(d): self.field.format(v) for d, v in sorted(self._c.items())}}

    @classmethod
    def from_json(cls, field: FieldSpec, data: Mapping) -> "LaurentPoly":
        return cls(field, {int(d): field.parse(v) for d, v in data["coeffs"].items()})

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        terms = []
        for d in sorted(self._c):
            c = self.field.format(self._c[d])
            mono = "" if d == 0 else ("pi" if d == 1 else f"pi^{d}")
            if not mono:
                terms.append(c)
            elif c == "1":
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}" if "+" in c else f"{c}*{mono}")
        return f"LaurentPoly({' + '.join(terms)}, q={self.field.q})"


def _as_poly(field: FieldSpec, x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        if x.field != field:
            raise ValueError("mismatched fields")
        return x
    return LaurentPoly.constant(field, x)


def _same(a: LaurentPoly, b: LaurentPoly) -> FieldSpec:
    if a.field != b.field:
        raise ValueError(f"mismatched fields F_{a.field.q} and F_{b.field.q}")
    return a.field


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    f = _same(a, b)
    add = f.add_table
    out = dict(a._c)
    for d, v in b._c.items():
        s = add[out.get(d, 0)][v]
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return LaurentPoly._raw(f, out)


def lp_neg(a: LaurentPoly) -> LaurentPoly:
    neg = a.field.neg_table
    return LaurentPoly._raw(a.field, {d: neg[v] for d, v in a._c.items()})


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    f = _same(a, b)
    add, mul = f.add_table, f.mul_table
    out: dict[int, int] = {}
    for i, x in a._c.items():
        row = mul[x]
        for j, y in b._c.items():
            d = i + j
            out[d] = add[out.get(d, 0)][row[y]]
    return LaurentPoly._raw(f, {d: v for d, v in out.items() if v})


def valuation(a: "LaurentPoly | TruncatedSeries") -> int:
    """Least degree carrying a nonzero coefficient; ``ValueError`` for zero."""
    if isinstance(a, TruncatedSeries):
        if a.is_zero():
            raise ValueError("series is zero to its precision")
        return a.val
    return a.min_degree()


def unit_factor(b: LaurentPoly) -> tuple[int, LaurentPoly]:
    """Split ``b = s * pi**k`` with ``valuation(s) == 0``; returns ``(k, s)``."""
    k = valuation(b)
    return k, b.shift(-k)


def window(a: LaurentPoly, lo: int, hi: int) -> LaurentPoly:
    """Terms of ``a`` with ``lo <= degree < hi``."""
    return LaurentPoly._raw(a.field, {d: v for d, v in a._c.items() if lo <= d < hi})


class TruncatedSeries:
    """An element of F_q((pi)) known modulo ``pi**prec``.

    ``coeffs[j]`` is the coefficient of ``pi**(val + j)`` for ``val + j < prec``.
    A series that is zero to its precision has ``val == prec`` and no
    coefficients.
    """

    __slots__ = ("field", "val", "prec", "coeffs")

    def __init__(self, field: FieldSpec, val: int, prec: int, coeffs: Iterable[int]):
        cs = list(coeffs)[: max(prec - val, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        if not cs:
            val = prec
        self.field = field
        self.val = val
        self.prec = prec
        self.coeffs = tuple(cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_poly(self) -> LaurentPoly:
        """The truncation as an exact Laurent polynomial (degrees < prec)."""
        return LaurentPoly._raw(self.field, {self.val + j: c for j, c in enumerate(self.coeffs) if c})

    def __getitem__(self, deg: int) -> FqElem:
        if deg >= self.prec:
            raise IndexError(f"degree {deg} is beyond precision {self.prec}")
        j = deg - self.val
        return FqElem(self.field, self.coeffs[j] if 0 <= j < len(self.coeffs) else 0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.field, self.val, self.prec, self.coeffs) == (
            other.field, other.val, other.prec, other.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({self.to_poly()!r} + O(pi^{self.prec}))"


def inverse_coefficients(field: FieldSpec, s: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of ``1/s`` for a dense unit series ``s`` (s[0] != 0)."""
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    s0inv = inv[s[0]]
    t = [0] * n
    if n:
        t[0] = s0inv
    m = neg[s0inv]
    for j in range(1, n):
        acc = 0
        for i in range(1, min(j, len(s) - 1) + 1):
            if s[i] and t[j - i]:
                acc = add[acc][mul[s[i]][t[j - i]]]
        t[j] = mul[m][acc]
    return t


def inverse_mod(s: LaurentPoly, M: int) -> TruncatedSeries:
    """``1/s`` modulo ``pi**M`` for a unit ``s`` (valuation 0)."""
    if s.is_zero() or valuation(s) != 0:
        raise ValueError("inverse_mod needs a unit (valuation 0)")
    if M < 1:
        raise ValueError("precision must be >= 1")
    dense = [s._c.get(i, 0) for i in range(min(M, s.max_degree() + 1))]
    return TruncatedSeries(s.field, 0, M, inverse_coefficients(s.field, dense, M))
