"""Command-line interface: ``hecke-graphs <subcommand> ...``.

Exit status is 0 on success, 1 when a ``verify`` check fails and 2 on
invalid input (bad field, degree, window or file).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import export, forms
from .finite_field import FieldSpec
from .hecke_graph import (
    CheckReport,
    HeckeGraph,
    WindowError,
    graph_compose,
    graph_identity,
    graph_phi,
    graph_power,
    graph_zero,
    verify_all,
    verify_relation,
)
from .ramified import Gamma, RamGraph, graph_ramified, project_to_unramified
from . import ramified as ram


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.from_q(args.q, args.modulus)
    except ValueError as exc:
        raise UsageError(f"invalid field: {exc}")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(args, g: HeckeGraph | RamGraph) -> str:
    if args.format == "json":
        return export.to_json(g)
    if args.format == "dot":
        return export.to_dot(g, paired_edges=args.paired_edges)
    return export.to_table(g)


def _add_field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="field size (a prime power <= 25 is comfortable)")
    p.add_argument("--modulus", type=_int_list, default=None,
                   help="irreducible modulus coefficients, constant term first (e.g. 1,1,1)")


def _add_output_args(p: argparse.ArgumentParser, default: str = "table") -> None:
    p.add_argument("--format", choices=("dot", "json", "table"), default=default)
    p.add_argument("--output", "-o", help="write to this file instead of standard output")
    p.add_argument("--paired-edges", action="store_true",
                   help="DOT: draw each pair of opposite edges as one line with two weights")


def _add_threads(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=_positive, default=None,
                   help="worker threads for construction (default: $HECKE_GRAPHS_THREADS or 1)")


# -- graph / compose / power ----------------------------------------------------

def cmd_graph(args) -> int:
    f = _field(args)
    if args.operator == "phi":
        if args.degree is None:
            raise UsageError("--degree is required for the phi operator")
        g = graph_phi(f, args.degree, args.window, threads=args.threads)
    elif args.operator == "identity":
        g = graph_identity(f, args.window)
    else:
        g = graph_zero(f, args.window)
    _emit(args, _render(args, g))
    return 0


def _operand(f: FieldSpec, token: str, window: int, threads) -> HeckeGraph:
    if token in ("id", "identity"):
        return graph_identity(f, window)
    if token == "zero":
        return graph_zero(f, window)
    try:
        d = int(token)
    except ValueError:
        raise UsageError(f"operand {token!r} is not a degree, 'id' or 'zero'")
    if d < 1:
        raise UsageError(f"degree must be >= 1, got {d}")
    return graph_phi(f, d, window, threads=threads)


def _reach(token: str) -> int:
    return 0 if token in ("id", "identity", "zero") else int(token)


def cmd_compose(args) -> int:
    """``Phi_1 * ... * Phi_r``; ``--window`` is the window of the last factor."""
    f = _field(args)
    ops = args.operands
    windows = [args.window]
    for tok in reversed(ops[:-1]):
        windows.append(windows[-1] - _reach(tok))
    windows.reverse()
    if windows[0] < 0:
        raise WindowError(f"window {args.window} too small for {len(ops)} factors")
    graphs = [_operand(f, tok, w, args.threads) for tok, w in zip(ops, windows)]
    result = graphs[-1]
    for g in reversed(graphs[:-1]):
        result = graph_compose(g, result)
    _emit(args, _render(args, result))
    return 0


def cmd_power(args) -> int:
    f = _field(args)
    g = graph_phi(f, args.degree, args.window, threads=args.threads)
    _emit(args, _render(args, graph_power(g, args.k)))
    return 0


# -- verify ---------------------------------------------------------------------

def _report_text(args, reports: list[CheckReport], meta: dict) -> str:
    if args.format == "json":
        return json.dumps({**meta, "checks": [r.to_json() for r in reports],
                           "passed": all(r.passed for r in reports)}, indent=2, default=str) + "\n"
    return "".join(r.line() + "\n" for r in reports)


def cmd_verify(args) -> int:
    if args.target == "relation":
        f = _field(args)
        reports = [verify_relation(f, k, args.window) for k in (args.k or [2, 3])]
        meta = {"q": f.q, "window": args.window}
    elif args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                g = export.from_json(fh.read())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read graph from {args.input}: {exc}")
        if isinstance(g, RamGraph):
            reports = [ram.verify_weight_sums(g), ram.verify_symmetry(g)]
        else:
            reports = verify_all(g, args.degree)
        meta = {"q": g.field.q, "window": g.window, "input": args.input}
    else:
        if args.q is None or args.degree is None:
            raise UsageError("verify needs --q and --degree, or --input")
        f = _field(args)
        g = graph_phi(f, args.degree, args.window, threads=args.threads)
        reports = verify_all(g, args.degree)
        meta = {"q": f.q, "degree": args.degree, "window": args.window}
    _emit(args, _report_text(args, reports, meta))
    return 0 if all(r.passed for r in reports) else 1


# -- forms ----------------------------------------------------------------------

def _scalar(text: str, mode: str):
    try:
        return Fraction(text) if mode == "exact" else complex(text.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse scalar {text!r} in {mode} mode")


def _fmt_scalar(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if v.imag == 0:
        return repr(v.real)
    return repr(v)


def _values_text(args, values: list) -> str:
    if args.format == "json":
        return json.dumps([forms._scalar_json(v) for v in values]) + "\n"
    return ",".join(_fmt_scalar(v) for v in values) + "\n"


def _space_text(args, res: forms.SpaceResult) -> str:
    if args.format == "json":
        out = {"dimension": res.dimension, "unknowns": res.unknowns,
               "conditions": len(res.conditions),
               "basis": [b.to_json() for b in res.basis]}
        if res.induction:
            out["induction"] = [{"degree": d, "leading": str(a)} for d, a in res.induction]
        return json.dumps(out, indent=2) + "\n"
    return f"{res.dimension}\n"


def cmd_forms(args) -> int:
    if args.mode == "complex" and args.tol <= 0:
        raise UsageError("tolerance must be > 0")
    f = _field(args)
    qx = f.q ** args.degree
    action = args.action
    if action == "extend":
        lam = _scalar(args.lam, args.mode)
        fn = forms.extend_along_cusp(lam, _scalar(args.f0, args.mode), _scalar(args.f1, args.mode),
                                     qx, args.window, args.mode)
        text = _values_text(args, list(fn.values))
    elif action == "eigen":
        g = graph_phi(f, args.degree, args.window)
        basis = forms.eigenfunction_on_graph(g, _scalar(args.lam, args.mode), args.mode, args.tol)
        if args.format == "json":
            text = json.dumps({"dimension": len(basis), "basis": [b.to_json() for b in basis]},
                              indent=2) + "\n"
        else:
            text = f"{len(basis)}\n" + "".join(_values_text(args, list(b.values)) for b in basis)
    elif action == "eisenstein":
        mode = args.mode
        t = _scalar(args.t, mode)
        text = _values_text(args, [forms.eisenstein_eigenvalue(t, qx, mode)])
    elif action == "cusp-dim":
        res = forms.cusp_space_dim(f, args.max_degree, args.window, args.support, args.place_degrees)
        text = _space_text(args, res)
    else:
        res = forms.toroidal_space_dim(f, args.max_degree, args.window, args.place_degrees)
        text = _space_text(args, res)
    _emit(args, text)
    return 0


# -- ramified -------------------------------------------------------------------

def cmd_ramified(args) -> int:
    f = _field(args)
    entries = args.gamma.split(",")
    try:
        gamma = Gamma.of(f, [f.parse(e) for e in entries])
    except ValueError as exc:
        raise UsageError(f"invalid gamma: {exc}")
    rg = graph_ramified(f, gamma, args.window)
    _emit(args, _render(args, project_to_unramified(rg) if args.project else rg))
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-graphs",
        description="Graphs of Hecke operators for PGL_2 over the rational function field F_q(T).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="graph of a generator Hecke operator")
    _add_field_args(p)
    p.add_argument("--operator", choices=("phi", "identity", "zero"), default="phi")
    p.add_argument("--degree", type=_positive, help="degree of the place")
    p.add_argument("--window", type=_positive, required=True, help="last vertex with a complete star")
    _add_output_args(p)
    _add_threads(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("compose", help="composite of several operators")
    _add_field_args(p)
    p.add_argument("operands", nargs="+",
                   help="factors left to right: place degrees, 'id' or 'zero'")
    p.add_argument("--window", type=_positive, required=True, help="window of the last factor")
    _add_output_args(p)
    _add_threads(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("power", help="k-th power of a generator")
    _add_field_args(p)
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--window", type=_positive, required=True, help="window of the generator")
    _add_output_args(p)
    _add_threads(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="run the structural checks")
    p.add_argument("target", nargs="?", choices=("graph", "relation"), default="graph")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--modulus", type=_int_list, default=None)
    p.add_argument("--degree", type=_positive, default=None)
    p.add_argument("--window", type=_positive, default=12)
    p.add_argument("--k", type=int, choices=(2, 3), action="append",
                   help="relation to check (repeatable; default both)")
    p.add_argument("--input", help="JSON graph to check instead of building one")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--output", "-o")
    _add_threads(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("forms", help="automorphic form computations")
    p.add_argument("action", choices=("extend", "eigen", "eisenstein", "cusp-dim", "toroidal-dim"))
    _add_field_args(p)
    p.add_argument("--degree", type=_positive, default=1, help="degree of the place (q_x = q^degree)")
    p.add_argument("--window", type=_positive, default=12)
    p.add_argument("--lambda", dest="lam", default="0")
    p.add_argument("--f0", default="1")
    p.add_argument("--f1", default="1")
    p.add_argument("--t", default="1", help="character value at the uniformizer")
    p.add_argument("--max-degree", type=_nonneg, default=0)
    p.add_argument("--support", type=_int_list, default=None)
    p.add_argument("--place-degrees", type=_int_list, default=[1])
    p.add_argument("--mode", choices=forms.MODES, default="exact")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("ramified", help="ramified operator at the congruence level")
    _add_field_args(p)
    p.add_argument("--gamma", default="1,0,0,1", help="entries a,b,c,d of an invertible matrix")
    p.add_argument("--window", type=_positive, required=True)
    p.add_argument("--project", action="store_true", help="emit the projected unramified graph")
    _add_output_args(p)
    p.set_defaults(func=cmd_ramified)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hecke-graphs: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"hecke-graphs: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
