"""A ramified Hecke operator at level ``K'`` (identity modulo ``pi_x``).

The vertices over ``c_0`` and ``c_n`` (n >= 1) are ``c'_0`` and ``c'_{n,w}``
for ``w`` in P^1(F_q).  For a degree-one place ``y != x`` and ``gamma`` in
``GL_2(F_q)`` placed at ``x``, the operator ``Phi'_{y,gamma}`` has edges

* ``c'_0 -> c'_{1,w}`` with weight 1 for every ``w``;
* ``c'_{n,w} -> c'_{n+1,w.gamma}`` with weight 1 and
  ``c'_{n,w} -> c'_{n-1,w.gamma}`` with weight q, where ``c'_{0,*}`` is ``c'_0``.

They are built directly from these formulas.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

from .finite_field import FieldSpec, FqElem, ProjPoint, projective_line
from .hecke_graph import CheckReport, HeckeGraph


class FiberError(RuntimeError):
    """Vertices of one fibre project to different weighted stars."""


@functools.total_ordering
@dataclass(frozen=True)
class RamVertex:
    """``c'_0`` when ``n == 0`` (and ``w is None``), else ``c'_{n,w}``."""

    n: int
    w: ProjPoint | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if (self.n == 0) != (self.w is None):
            raise ValueError("c'_0 carries no point; c'_{n,w} with n >= 1 needs one")

    @property
    def is_base(self) -> bool:
        return self.n == 0

    def sort_key(self):
        return (self.n, (0, 0) if self.w is None else self.w.sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def name(self, field: FieldSpec) -> str:
        if self.n == 0:
            return "c'0"
        return f"c'{self.n}_{self.w.label(field)}"

    @classmethod
    def parse(cls, field: FieldSpec, name: str) -> "RamVertex":
        if not name.startswith("c'"):
            raise ValueError(f"bad ramified vertex name {name!r}")
        body = name[2:]
        if body == "0":
            return BASE
        n, _, w = body.partition("_")
        point = ProjPoint(None) if w == "inf" else ProjPoint(field.parse(w))
        return cls(int(n), point)


BASE = RamVertex(0)


@dataclass(frozen=True)
class Gamma:
    """An invertible matrix ``(a b; c d)`` over F_q."""

    a: FqElem
    b: FqElem
    c: FqElem
    d: FqElem

    def __post_init__(self):
        if (self.a * self.d - self.b * self.c).is_zero():
            raise ValueError("gamma must be invertible")

    @classmethod
    def of(cls, field: FieldSpec, entries: Sequence) -> "Gamma":
        if len(entries) != 4:
            raise ValueError("gamma needs four entries a, b, c, d")
        return cls(*(field(e) for e in entries))

    @classmethod
    def identity(cls, field: FieldSpec) -> "Gamma":
        return cls.of(field, (1, 0, 0, 1))

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def entries(self) -> tuple[FqElem, FqElem, FqElem, FqElem]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "Gamma") -> "Gamma":
        return Gamma(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                     self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)


def proj_action(w: ProjPoint, gamma: Gamma) -> ProjPoint:
    """Right action ``[u:v] -> [u:v] gamma`` on row vectors, renormalized."""
    f = gamma.field
    u, v = (f.zero, f.one) if w.is_infinity else (f.one, FqElem(f, w.b))
    x = u * gamma.a + v * gamma.c
    y = u * gamma.b + v * gamma.d
    if x.is_zero():
        return ProjPoint(None)
    return ProjPoint((y / x).index)


@dataclass(frozen=True, eq=False)
class RamGraph:
    field: FieldSpec
    gamma: Gamma
    window: int
    out: Mapping[RamVertex, Mapping[RamVertex, int]]

    def vertices(self) -> list[RamVertex]:
        return sorted(self.out)

    def edges(self) -> list[tuple[RamVertex, RamVertex, int]]:
        return [(v, t, w) for v in self.vertices() for t, w in sorted(self.out[v].items())]

    def edge_dict(self) -> dict[tuple[RamVertex, RamVertex], int]:
        return {(v, t): w for v, t, w in self.edges()}

    def __eq__(self, other):
        if not isinstance(other, RamGraph):
            return NotImplemented
        return self.field == other.field and self.window == other.window and \
            self.edge_dict() == other.edge_dict()

    __hash__ = None


def graph_ramified(field: FieldSpec, gamma: Gamma, window: int) -> RamGraph:
    if window < 1:
        raise ValueError("window must be >= 1")
    if gamma.field != field:
        raise ValueError("gamma lives over a different field")
    q = field.q
    points = projective_line(field)
    out: dict[RamVertex, dict[RamVertex, int]] = {BASE: {RamVertex(1, w): 1 for w in points}}
    for n in range(1, window + 1):
        for w in points:
            wg = proj_action(w, gamma)
            down = BASE if n == 1 else RamVertex(n - 1, wg)
            out[RamVertex(n, w)] = {RamVertex(n + 1, wg): 1, down: q}
    frozen = {v: MappingProxyType(s) for v, s in out.items()}
    return RamGraph(field, gamma, window, MappingProxyType(frozen))


def project_to_unramified(rg: RamGraph) -> HeckeGraph:
    """Image under ``c'_0 -> c_0``, ``c'_{n,w} -> c_n``, merging edges per source vertex."""
    stars: dict[int, dict[int, int]] = {}
    for v in rg.vertices():
        star: dict[int, int] = {}
        for t, m in rg.out[v].items():
            star[t.n] = star.get(t.n, 0) + m
        if v.n in stars and stars[v.n] != star:
            raise FiberError(f"fibre over c_{v.n} is inconsistent: {stars[v.n]} vs {star}")
        stars[v.n] = star
    q = rg.field.q
    return HeckeGraph(rg.field, rg.window, 1, stars, "phi", 1, q + 1)


def verify_weight_sums(rg: RamGraph) -> CheckReport:
    q = rg.field.q
    bad = [(v.name(rg.field), sum(s.values())) for v, s in rg.out.items()
           if sum(s.values()) != q + 1]
    return CheckReport("weight_sums", not bad, bad, q + 1)


def verify_symmetry(rg: RamGraph) -> CheckReport:
    """Edges between complete vertices lacking a reverse edge."""
    bad = []
    for v, t, _ in rg.edges():
        if t in rg.out and v not in rg.out[t]:
            bad.append((v.name(rg.field), t.name(rg.field)))
    return CheckReport("symmetry", not bad, bad)


def involutive_on_line(gamma: Gamma) -> bool:
    """Whether ``gamma^2`` fixes every point of P^1(F_q)."""
    g2 = gamma @ gamma
    return all(proj_action(w, g2) == w for w in projective_line(gamma.field))
