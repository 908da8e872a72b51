"""Arithmetic in F_q for q = p^k.

Elements are stored as integers ``0 <= i < q`` whose base-p digits are the
coefficient vector (constant term first) of a polynomial reduced modulo the
field's defining polynomial.  Integer order therefore coincides with
lexicographic order on coefficient vectors read from the top degree down,
so ``F_4`` enumerates as ``0, 1, t, t+1``.

All tables are built once per :class:`FieldSpec` and shared; hot loops in the
reduction kernels index them directly.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

# Default irreducible moduli (constant term first) for the non-prime q <= 25.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (5, 2): (2, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise ``ValueError`` otherwise."""
    if q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1 or not is_prime(p):
        raise ValueError(f"q = {q} is not a prime power")
    return p, k


# -- polynomials over F_p as coefficient tuples, constant term first ----------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``k`` in lexicographic order."""
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p^k, given by an irreducible ``modulus`` when k > 1."""

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None
    _tables: "_Tables" = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        mod = self.modulus
        if self.k == 1:
            if mod is not None and len(mod) > 2:
                raise ValueError("prime fields take no modulus of degree > 1")
            mod = None
        else:
            if mod is None:
                mod = DEFAULT_MODULI.get((self.p, self.k)) or find_irreducible(self.p, self.k)
            mod = tuple(int(c) % self.p for c in mod)
            if len(mod) != self.k + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {self.k}")
            if not is_irreducible(mod, self.p):
                raise ValueError(f"modulus {mod} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "_tables", _build_tables(self.p, self.k, mod))

    @classmethod
    def from_q(cls, q: int, modulus: Sequence[int] | None = None) -> "FieldSpec":
        p, k = factor_prime_power(q)
        return cls(p, k, tuple(modulus) if modulus is not None else None)

    @property
    def q(self) -> int:
        return self.p ** self.k

    # raw tables, indexed by element integers
    @property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        return self._tables.add

    @property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        return self._tables.mul

    @property
    def neg_table(self) -> tuple[int, ...]:
        return self._tables.neg

    @property
    def inv_table(self) -> tuple[int, ...]:
        """``inv_table[0]`` is 0 and must never be consulted."""
        return self._tables.inv

    def __call__(self, value) -> "FqElem":
        return FqElem.coerce(self, value)

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    def coefficients(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            index, r = divmod(index, self.p)
            out.append(r)
        return tuple(out)

    def from_coefficients(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def format(self, index: int) -> str:
        """Canonical string: an integer for prime fields, else a polynomial in t."""
        if self.k == 1:
            return str(index)
        terms = []
        for i, c in enumerate(self.coefficients(index)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(reversed(terms)) if terms else "0"

    def parse(self, text: str) -> int:
        text = text.strip().replace(" ", "")
        if self.k == 1:
            return int(text) % self.p
        if text in ("", "0"):
            return 0
        coeffs = [0] * self.k
        for term in text.split("+"):
            if "t" in term:
                c, _, mono = term.rpartition("*") if "*" in term else ("1", "", term)
                deg = 1 if mono == "t" else int(mono.split("^")[1])
                coeffs[deg] = (coeffs[deg] + int(c)) % self.p
            else:
                coeffs[0] = (coeffs[0] + int(term)) % self.p
        return self.from_coefficients(coeffs)


@dataclass(frozen=True)
class _Tables:
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...]


@functools.lru_cache(maxsize=None)
def _build_tables(p: int, k: int, modulus: tuple[int, ...] | None) -> _Tables:
    q = p**k
    vecs = []
    for i in range(q):
        v, r = [], i
        for _ in range(k):
            r, d = divmod(r, p)
            v.append(d)
        vecs.append(v)

    def enc(v: Sequence[int]) -> int:
        return sum(c * p**i for i, c in enumerate(v))

    add = tuple(tuple(enc([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in range(q))
                for a in range(q))
    neg = tuple(enc([(-x) % p for x in vecs[a]]) for a in range(q))
    mul_rows = []
    for a in range(q):
        row = []
        for b in range(q):
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(vecs[a]):
                if x:
                    for j, y in enumerate(vecs[b]):
                        prod[i + j] = (prod[i + j] + x * y) % p
            red = _poly_mod(prod, modulus, p) if modulus else [c % p for c in prod]
            row.append(enc(red + [0] * (k - len(red))))
        mul_rows.append(tuple(row))
    mul = tuple(mul_rows)
    inv = [0] * q
    for a in range(1, q):
        inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
    return _Tables(add, mul, neg, tuple(inv))


class FqElem:
    """An element of F_q; immutable, hashable, with arithmetic operators."""

    __slots__ = ("field", "index")

    def __init__(self, field: FieldSpec, index: int):
        if not 0 <= index < field.q:
            raise ValueError(f"element index {index} out of range for F_{field.q}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FqElem is immutable")

    @classmethod
    def coerce(cls, field: FieldSpec, value) -> "FqElem":
        if isinstance(value, FqElem):
            _check_same(field, value.field)
            return value
        if isinstance(value, int):
            if field.k == 1:
                return cls(field, value % field.p)
            return cls(field, value)
        if isinstance(value, str):
            return cls(field, field.parse(value))
        if isinstance(value, (tuple, list)):
            return cls(field, field.from_coefficients(value))
        raise TypeError(f"cannot interpret {value!r} as an element of F_{field.q}")

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.coefficients(self.index)

    def is_zero(self) -> bool:
        return self.index == 0

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self == FqElem.coerce(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.index))

    def __add__(self, other):
        return fq_add(self, _lift(self.field, other))

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, self.field.neg_table[self.index])

    def __sub__(self, other):
        return fq_add(self, -_lift(self.field, other))

    def __rsub__(self, other):
        return fq_add(_lift(self.field, other), -self)

    def __mul__(self, other):
        return fq_mul(self, _lift(self.field, other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return fq_mul(self, fq_inv(_lift(self.field, other)))

    def __pow__(self, e: int):
        if e < 0:
            return fq_inv(self) ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"FqElem({self.field.format(self.index)!r}, q={self.field.q})"

    def __str__(self):
        return self.field.format(self.index)


def _lift(field: FieldSpec, x) -> FqElem:
    return FqElem.coerce(field, x)


def _check_same(f1: FieldSpec, f2: FieldSpec) -> None:
    if f1 != f2:
        raise ValueError(f"mismatched fields F_{f1.q} ({f1.modulus}) and F_{f2.q} ({f2.modulus})")


def fq_add(a: FqElem, b: FqElem) -> FqElem:
    _check_same(a.field, b.field)
    return FqElem(a.field, a.field.add_table[a.index][b.index])


def fq_mul(a: FqElem, b: FqElem) -> FqElem:
    _check_same(a.field, b.field)
    return FqElem(a.field, a.field.mul_table[a.index][b.index])


def fq_inv(a: FqElem) -> FqElem:
    if a.index == 0:
        raise ZeroDivisionError("inverse of zero in F_q")
    return FqElem(a.field, a.field.inv_table[a.index])


def enumerate_elements(spec: FieldSpec) -> list[FqElem]:
    return [FqElem(spec, i) for i in range(spec.q)]


@functools.total_ordering
@dataclass(frozen=True)
class ProjPoint:
    """A point of P^1(F_q): ``[1:b]`` when ``b`` is set, ``[0:1]`` when it is None.

    ``b`` is stored as the element index so points sort deterministically with
    the affine points first.
    """

    b: int | None

    @property
    def is_infinity(self) -> bool:
        return self.b is None

    def sort_key(self) -> tuple[int, int]:
        return (1, 0) if self.b is None else (0, self.b)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def label(self, spec: FieldSpec) -> str:
        """Vertex-name fragment: ``inf`` or the canonical affine coordinate."""
        return "inf" if self.b is None else spec.format(self.b)

    def __str__(self):
        return "[0:1]" if self.b is None else f"[1:{self.b}]"


INFINITY = ProjPoint(None)


def affine(b: FqElem | int) -> ProjPoint:
    return ProjPoint(b.index if isinstance(b, FqElem) else int(b))


def projective_line(spec: FieldSpec) -> list[ProjPoint]:
    """The q affine points ``[1:b]`` in element order, then ``[0:1]``."""
    return [ProjPoint(i) for i in range(spec.q)] + [INFINITY]


def iter_tuples(spec: FieldSpec, length: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(spec.q), repeat=length)
