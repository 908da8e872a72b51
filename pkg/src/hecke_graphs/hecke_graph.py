"""Graphs of unramified Hecke operators on the vertices ``c_0, c_1, ...``.

A graph is stored only on a finite window: for every origin ``n <= window``
the complete outgoing star is recorded.  ``reach`` bounds ``|terminus -
origin|`` over *all* edges of the underlying infinite graph and drives the
window bookkeeping of :func:`graph_compose`.

Weights are Python integers.  Generator graphs have positive weights; sums
and scalings of graphs may carry any nonzero integer weight.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from . import kernels
from .finite_field import FieldSpec, projective_line
from .reduction import p_matrix, reduce, xi_matrix


class WindowError(ValueError):
    """A graph's window is too small for the requested operation."""


@dataclass(frozen=True, order=True)
class Edge:
    origin: int
    terminus: int
    weight: int


@dataclass(frozen=True, eq=False)
class HeckeGraph:
    field: FieldSpec
    window: int
    reach: int
    out: Mapping[int, Mapping[int, int]]
    kind: str = "composite"
    degree: int | None = None
    weight_sum: int | None = None

    def __post_init__(self):
        if self.window < 0:
            raise ValueError("window must be >= 0")
        clean = {}
        for v in range(self.window + 1):
            star = {t: w for t, w in self.out.get(v, {}).items() if w != 0}
            clean[v] = MappingProxyType(dict(sorted(star.items())))
        extra = [v for v in self.out if not 0 <= v <= self.window]
        if extra:
            raise ValueError(f"origins outside the window: {sorted(extra)[:5]}")
        object.__setattr__(self, "out", MappingProxyType(clean))

    @property
    def q(self) -> int:
        return self.field.q

    def star(self, v: int) -> Mapping[int, int]:
        if not 0 <= v <= self.window:
            raise WindowError(f"vertex c_{v} is outside the window [0, {self.window}]")
        return self.out[v]

    def edges(self) -> list[Edge]:
        return [Edge(v, t, w) for v in range(self.window + 1) for t, w in self.out[v].items()]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())

    def __len__(self) -> int:
        return sum(len(s) for s in self.out.values())

    def restrict(self, window: int) -> "HeckeGraph":
        if window > self.window:
            raise WindowError(f"cannot extend window {self.window} to {window}")
        return HeckeGraph(self.field, window, self.reach,
                          {v: self.out[v] for v in range(window + 1)},
                          self.kind, self.degree, self.weight_sum)

    def edge_dict(self) -> dict[tuple[int, int], int]:
        return {(e.origin, e.terminus): e.weight for e in self.edges()}

    def __eq__(self, other):
        if not isinstance(other, HeckeGraph):
            return NotImplemented
        return (self.field == other.field and self.window == other.window
                and self.edge_dict() == other.edge_dict())

    __hash__ = None


def same_edges(g1: HeckeGraph, g2: HeckeGraph) -> bool:
    """Edge equality on the common window."""
    w = min(g1.window, g2.window)
    return g1.field == g2.field and g1.restrict(w).edge_dict() == g2.restrict(w).edge_dict()


# -- construction -------------------------------------------------------------

def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    try:
        return max(1, int(os.environ.get("HECKE_GRAPHS_THREADS", "1")))
    except ValueError:
        return 1


def phi_neighbours(field: FieldSpec, n: int, d: int, backend: str | None = None) -> dict[int, int]:
    """Weighted neighbours of ``c_n`` in the graph of the degree-``d`` generator."""
    if n < 0:
        raise ValueError("vertex index must be >= 0")
    if d < 1:
        raise ValueError("degree must be >= 1")
    return dict(sorted(kernels.phi_tally(field, n, d, backend).items()))


def phi_neighbours_xi(field: FieldSpec, n: int) -> dict[int, int]:
    """Degree-one neighbours of ``c_n`` from the classes ``[p_n xi_w]``, ``w`` in P^1(F_q)."""
    counts: dict[int, int] = {}
    pn = p_matrix(field, n)
    for w in projective_line(field):
        v = reduce(pn @ xi_matrix(field, w))
        counts[v] = counts.get(v, 0) + 1
    return dict(sorted(counts.items()))


def graph_phi(field: FieldSpec, d: int, window: int, threads: int | None = None,
              backend: str | None = None) -> HeckeGraph:
    """Graph of the Hecke operator of a degree-``d`` place on ``c_0 .. c_window``."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if window < 0:
        raise ValueError("window must be >= 0")
    nthreads = _thread_count(threads)
    vertices = range(window + 1)
    if nthreads > 1:
        with ThreadPoolExecutor(nthreads) as pool:
            stars = list(pool.map(lambda n: phi_neighbours(field, n, d, backend), vertices))
    else:
        stars = [phi_neighbours(field, n, d, backend) for n in vertices]
    return HeckeGraph(field, window, d, dict(zip(vertices, stars)), "phi", d, field.q**d + 1)


def graph_identity(field: FieldSpec, window: int) -> HeckeGraph:
    return HeckeGraph(field, window, 0, {v: {v: 1} for v in range(window + 1)}, "identity",
                      weight_sum=1)


def graph_zero(field: FieldSpec, window: int) -> HeckeGraph:
    return HeckeGraph(field, window, 0, {}, "zero", weight_sum=0)


# -- algebra ------------------------------------------------------------------

def _check_field(g1: HeckeGraph, g2: HeckeGraph) -> None:
    if g1.field != g2.field:
        raise ValueError(f"graphs over different fields F_{g1.q} and F_{g2.q}")


def graph_add(g1: HeckeGraph, g2: HeckeGraph) -> HeckeGraph:
    """Weight-wise sum on the common window; zero-weight edges disappear."""
    _check_field(g1, g2)
    w = min(g1.window, g2.window)
    out = {}
    for v in range(w + 1):
        star = dict(g1.out[v])
        for t, m in g2.out[v].items():
            star[t] = star.get(t, 0) + m
        out[v] = star
    ws = None
    if g1.weight_sum is not None and g2.weight_sum is not None:
        ws = g1.weight_sum + g2.weight_sum
    return HeckeGraph(g1.field, w, max(g1.reach, g2.reach), out, "composite", None, ws)


def graph_scale(r: int, g: HeckeGraph) -> HeckeGraph:
    out = {v: {t: r * m for t, m in g.out[v].items()} for v in range(g.window + 1)}
    ws = None if g.weight_sum is None else r * g.weight_sum
    kind = "zero" if r == 0 else "composite"
    return HeckeGraph(g.field, g.window, 0 if r == 0 else g.reach, out, kind, None, ws)


def graph_subtract(g1: HeckeGraph, g2: HeckeGraph) -> HeckeGraph:
    return graph_add(g1, graph_scale(-1, g2))


def graph_compose(g1: HeckeGraph, g2: HeckeGraph) -> HeckeGraph:
    """Graph of ``Phi_1 * Phi_2``: sum of ``m' m''`` over paths ``v -> v'' -> v'``.

    Every intermediate vertex must have complete data in ``g2``, so
    ``g2.window >= g1.window + g1.reach`` is required.
    """
    _check_field(g1, g2)
    if g2.window < g1.window + g1.reach:
        raise WindowError(
            f"compose needs window(G2) >= window(G1) + reach(G1) = {g1.window + g1.reach}, "
            f"got {g2.window}")
    out = {}
    for v in range(g1.window + 1):
        star: dict[int, int] = {}
        for mid, m1 in g1.out[v].items():
            for t, m2 in g2.out[mid].items():
                star[t] = star.get(t, 0) + m1 * m2
        out[v] = star
    ws = None
    if g1.weight_sum is not None and g2.weight_sum is not None:
        ws = g1.weight_sum * g2.weight_sum
    return HeckeGraph(g1.field, g1.window, g1.reach + g2.reach, out, "composite", None, ws)


def graph_power(g: HeckeGraph, k: int) -> HeckeGraph:
    """``k``-fold composite; the window shrinks to ``window - (k-1) * reach``."""
    if k < 0:
        raise ValueError("power must be >= 0")
    if k == 0:
        return graph_identity(g.field, g.window)
    final = g.window - (k - 1) * g.reach
    if final < 0:
        raise WindowError(f"window {g.window} too small for power {k} at reach {g.reach}")
    result = g
    for i in range(2, k + 1):
        result = graph_compose(g.restrict(g.window - (i - 1) * g.reach), result)
    return result


def operator_graph(field: FieldSpec, degrees: Iterable[int], window: int) -> HeckeGraph:
    """Graph of ``Phi_{y_1} * ... * Phi_{y_r}`` for places of the given degrees.

    Each factor is built with just enough window for the composite to be
    complete on ``c_0 .. c_window``.  An empty product is the identity.
    """
    degrees = list(degrees)
    if not degrees:
        return graph_identity(field, window)
    needed = window + sum(degrees[:-1])
    result = graph_phi(field, degrees[-1], needed)
    for i in range(len(degrees) - 2, -1, -1):
        w = window + sum(degrees[:i])
        result = graph_compose(graph_phi(field, degrees[i], w), result)
    return result


# -- verification -------------------------------------------------------------

@dataclass
class CheckReport:
    name: str
    passed: bool
    violations: list = field(default_factory=list)
    value: object = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" value={self.value}" if self.value is not None else ""
        viol = f" violations={len(self.violations)}" if self.violations else ""
        return f"{status} {self.name}{extra}{viol}"

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "value": self.value,
                "violations": [list(v) if isinstance(v, tuple) else v for v in self.violations]}


def verify_weight_sums(g: HeckeGraph, expected: int | None = None) -> CheckReport:
    expected = g.weight_sum if expected is None else expected
    if expected is None:
        return CheckReport("weight_sums", True, value="unconstrained")
    bad = [(v, sum(s.values())) for v, s in g.out.items() if sum(s.values()) != expected]
    return CheckReport("weight_sums", not bad, bad, expected)


def verify_symmetry(g: HeckeGraph) -> CheckReport:
    """Every edge between two complete vertices has a reverse edge."""
    bad = []
    for e in g.edges():
        if e.terminus <= g.window and e.origin not in g.out[e.terminus]:
            bad.append((e.origin, e.terminus))
    return CheckReport("symmetry", not bad, bad)


def verify_tail(g: HeckeGraph, d: int) -> CheckReport:
    """Stars ``{c_(n-d): q^d, c_(n+d): 1}`` for ``d < n <= window - d``."""
    qd = g.q**d
    bad = []
    for n in range(d + 1, g.window - d + 1):
        if dict(g.out[n]) != {n - d: qd, n + d: 1}:
            bad.append((n, dict(g.out[n])))
    return CheckReport("tail", not bad, bad)


def component_count(g: HeckeGraph) -> int:
    """Connected components of the window restriction, edges taken as undirected."""
    parent = list(range(g.window + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges():
        if e.terminus <= g.window:
            a, b = find(e.origin), find(e.terminus)
            if a != b:
                parent[a] = b
    return len({find(v) for v in range(g.window + 1)})


def vertex_label(n: int) -> int:
    """Determinant parity of ``p_n``: the class of ``pi^-n`` modulo squares."""
    return n % 2


def verify_labels(g: HeckeGraph, d: int) -> CheckReport:
    """Odd ``d``: edges change the label; even ``d``: edges keep it."""
    want = d % 2
    bad = [(e.origin, e.terminus) for e in g.edges()
           if (vertex_label(e.origin) ^ vertex_label(e.terminus)) != want]
    return CheckReport("labels", not bad, bad)


def verify_components(g: HeckeGraph, d: int) -> CheckReport:
    if g.window < 2 * d:
        raise WindowError(f"component count needs window >= {2 * d}")
    expected = 2 if d % 2 == 0 else 1
    got = component_count(g)
    return CheckReport("components", got == expected, [] if got == expected else [(got, expected)], got)


def neighbour_distance_check(g: HeckeGraph, d: int) -> CheckReport:
    dist = max((abs(e.terminus - e.origin) for e in g.edges()), default=0)
    bad = [(e.origin, e.terminus) for e in g.edges() if abs(e.terminus - e.origin) > d]
    return CheckReport("distance", not bad, bad, dist)


def relation_graphs(field: FieldSpec, k: int, window: int) -> tuple[HeckeGraph, HeckeGraph]:
    """Both sides of ``Phi_x^2 = Phi_y + 2q`` (k=2) or ``Phi_x^3 = Phi_y + 3q Phi_x`` (k=3)."""
    q = field.q
    gx = graph_phi(field, 1, window + k - 1)
    lhs = graph_power(gx, k)
    if k == 2:
        rhs = graph_add(graph_phi(field, 2, window), graph_scale(2 * q, graph_identity(field, window)))
    elif k == 3:
        rhs = graph_add(graph_phi(field, 3, window), graph_scale(3 * q, gx.restrict(window)))
    else:
        raise ValueError("relations are known for k = 2 and k = 3")
    return lhs, rhs


def verify_relation(field: FieldSpec, k: int, window: int) -> CheckReport:
    lhs, rhs = relation_graphs(field, k, window)
    a, b = lhs.edge_dict(), rhs.edge_dict()
    bad = sorted(key for key in set(a) | set(b) if a.get(key) != b.get(key))
    return CheckReport(f"relation_k{k}", not bad, bad)


def verify_all(g: HeckeGraph, d: int | None = None) -> list[CheckReport]:
    """The full structural suite for a generator graph of degree ``d``."""
    d = g.degree if d is None else d
    reports = [verify_weight_sums(g), verify_symmetry(g)]
    if d is not None:
        reports.append(verify_tail(g, d))
        reports.append(verify_labels(g, d))
        if g.window >= 2 * d:
            reports.append(verify_components(g, d))
        reports.append(neighbour_distance_check(g, d))
    return reports
