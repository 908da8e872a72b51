"""Graphs of Hecke operators for PGL_2 over F_q(T)."""

from .finite_field import FieldSpec, FqElem, ProjPoint, projective_line
from .forms import (
    CuspFunction,
    cusp_space_dim,
    eigenfunction_on_graph,
    eisenstein_eigenvalue,
    extend_along_cusp,
    toroidal_space_dim,
)
from .hecke_graph import (
    Edge,
    HeckeGraph,
    WindowError,
    graph_add,
    graph_compose,
    graph_identity,
    graph_phi,
    graph_power,
    graph_scale,
    graph_zero,
    phi_neighbours,
)
from .kernels import BACKEND
from .laurent import LaurentPoly, TruncatedSeries
from .ramified import Gamma, RamGraph, RamVertex, graph_ramified, project_to_unramified
from .reduction import Mat2, ReductionError, reduce

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CuspFunction", "Edge", "FieldSpec", "FqElem", "Gamma", "HeckeGraph",
    "LaurentPoly", "Mat2", "ProjPoint", "RamGraph", "RamVertex", "ReductionError",
    "TruncatedSeries", "WindowError", "cusp_space_dim", "eigenfunction_on_graph",
    "eisenstein_eigenvalue", "extend_along_cusp", "graph_add", "graph_compose",
    "graph_identity", "graph_phi", "graph_power", "graph_ramified", "graph_scale",
    "graph_zero", "phi_neighbours", "project_to_unramified", "projective_line", "reduce",
    "toroidal_space_dim",
]
