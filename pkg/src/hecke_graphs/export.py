"""JSON, DOT and plain-table serialization of Hecke graphs.

All output is ordered (edges by origin then terminus) so identical graphs
serialize to identical bytes.  Weights are written as decimal strings.
"""

from __future__ import annotations

import json

from .finite_field import FieldSpec
from .hecke_graph import HeckeGraph
from .ramified import Gamma, RamGraph, RamVertex


def _field_json(field: FieldSpec) -> dict:
    out = {"p": field.p, "k": field.k}
    if field.k > 1:
        out["modulus"] = [int(c) for c in field.modulus]
    return out


def graph_to_dict(g: HeckeGraph) -> dict:
    op = {"kind": g.kind}
    if g.degree is not None:
        op["degree"] = g.degree
    return {
        "q": g.q,
        "field": _field_json(g.field),
        "operator": op,
        "window": g.window,
        "reach": g.reach,
        "weight_sum": None if g.weight_sum is None else str(g.weight_sum),
        "edges": [{"from": e.origin, "to": e.terminus, "weight": str(e.weight)} for e in g.edges()],
    }


def _field_from(d: dict) -> FieldSpec:
    info = d.get("field")
    if info is None:
        return FieldSpec.from_q(int(d["q"]))
    modulus = tuple(info["modulus"]) if "modulus" in info else None
    field = FieldSpec(int(info["p"]), int(info["k"]), modulus)
    if field.q != int(d["q"]):
        raise ValueError("field description disagrees with q")
    return field


def graph_from_dict(d: dict) -> HeckeGraph:
    field = _field_from(d)
    out: dict[int, dict[int, int]] = {}
    for e in d["edges"]:
        star = out.setdefault(int(e["from"]), {})
        t = int(e["to"])
        if t in star:
            raise ValueError(f"duplicate edge {e['from']} -> {t}")
        star[t] = int(e["weight"])
    op = d.get("operator", {})
    ws = d.get("weight_sum")
    return HeckeGraph(field, int(d["window"]), int(d["reach"]), out,
                      op.get("kind", "composite"), op.get("degree"),
                      None if ws is None else int(ws))


def to_json(g: HeckeGraph | RamGraph) -> str:
    d = graph_to_dict(g) if isinstance(g, HeckeGraph) else ram_to_dict(g)
    return json.dumps(d, indent=2) + "\n"


def from_json(text: str) -> HeckeGraph | RamGraph:
    d = json.loads(text)
    if d.get("operator", {}).get("kind") == "ramified":
        return ram_from_dict(d)
    return graph_from_dict(d)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _dot(name: str, nodes: list[str], edges: list[tuple[str, str, int]], paired: bool) -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for n in nodes:
        lines.append(f'  "{_dot_escape(n)}";')
    if not paired:
        for a, b, w in edges:
            lines.append(f'  "{_dot_escape(a)}" -> "{_dot_escape(b)}" [label="{w}"];')
    else:
        # one undirected line per pair, labelled near each origin
        weights = {(a, b): w for a, b, w in edges}
        done = set()
        for a, b, w in edges:
            if (a, b) in done:
                continue
            back = weights.get((b, a))
            if back is not None and a != b:
                done.add((b, a))
                lines.append(f'  "{_dot_escape(a)}" -> "{_dot_escape(b)}" '
                             f'[dir=none, taillabel="{w}", headlabel="{back}"];')
            else:
                lines.append(f'  "{_dot_escape(a)}" -> "{_dot_escape(b)}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(g: HeckeGraph | RamGraph, paired_edges: bool = False) -> str:
    if isinstance(g, RamGraph):
        f = g.field
        nodes = sorted({v for e in g.edges() for v in e[:2]})
        return _dot("ramified", [v.name(f) for v in nodes],
                    [(a.name(f), b.name(f), w) for a, b, w in g.edges()], paired_edges)
    nodes = sorted({v for e in g.edges() for v in (e.origin, e.terminus)} | set(range(g.window + 1)))
    return _dot("hecke", [f"c{n}" for n in nodes],
                [(f"c{e.origin}", f"c{e.terminus}", e.weight) for e in g.edges()], paired_edges)


def to_table(g: HeckeGraph | RamGraph) -> str:
    if isinstance(g, RamGraph):
        rows = [(a.name(g.field), b.name(g.field), str(w)) for a, b, w in g.edges()]
    else:
        rows = [(f"c{e.origin}", f"c{e.terminus}", str(e.weight)) for e in g.edges()]
    header = ("from", "to", "weight")
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(3)]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    return "\n".join([fmt(header), *map(fmt, rows)]) + "\n"


# -- ramified graphs ------------------------------------------------------------

def ram_to_dict(rg: RamGraph) -> dict:
    f = rg.field
    return {
        "q": f.q,
        "field": _field_json(f),
        "operator": {"kind": "ramified", "gamma": [f.format(e.index) for e in rg.gamma.entries()]},
        "window": rg.window,
        "reach": 1,
        "edges": [{"from": a.name(f), "to": b.name(f), "weight": str(w)} for a, b, w in rg.edges()],
    }


def ram_from_dict(d: dict) -> RamGraph:
    field = _field_from(d)
    gamma = Gamma.of(field, [field.parse(s) for s in d["operator"]["gamma"]])
    out: dict[RamVertex, dict[RamVertex, int]] = {}
    for e in d["edges"]:
        a, b = RamVertex.parse(field, e["from"]), RamVertex.parse(field, e["to"])
        out.setdefault(a, {})[b] = int(e["weight"])
    return RamGraph(field, gamma, int(d["window"]), out)
