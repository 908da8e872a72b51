"""Backend selection for the reduction kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``HECKE_GRAPHS_PURE_PYTHON`` is set to a non-empty value other than
``0``, the pure-Python ``_kernels_py`` module is used.  Both expose the same
two functions, wrapped here to take a :class:`FieldSpec`.
"""

from __future__ import annotations

import functools
import os
from typing import Sequence

import numpy as np

from . import _kernels_py
from .finite_field import FieldSpec

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _want_pure() -> bool:
    return os.environ.get("HECKE_GRAPHS_PURE_PYTHON", "") not in ("", "0")


BACKEND = "python" if (_ckernels is None or _want_pure()) else "cython"


@functools.lru_cache(maxsize=None)
def _np_tables(field: FieldSpec):
    return (
        np.ascontiguousarray(field.add_table, dtype=np.intc),
        np.ascontiguousarray(field.mul_table, dtype=np.intc),
        np.ascontiguousarray(field.neg_table, dtype=np.intc),
        np.ascontiguousarray(field.inv_table, dtype=np.intc),
    )


def _tables(field: FieldSpec, backend: str):
    if backend == "cython":
        return _np_tables(field)
    return field.add_table, field.mul_table, field.neg_table, field.inv_table


def _module(backend: str):
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    if backend == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {backend!r}")


def reduce_dense(field: FieldSpec, n: int, coeffs: Sequence[int], low: int = 0,
                 backend: str | None = None) -> int:
    """Vertex of ``(pi^n, sum coeffs[j] pi^(low+j); 0, 1)`` (coefficients as element indices)."""
    backend = backend or BACKEND
    return _module(backend).reduce_dense(n, list(coeffs), low, *_tables(field, backend))


def phi_tally(field: FieldSpec, n: int, d: int, backend: str | None = None) -> dict[int, int]:
    """Terminus -> multiplicity over all ``q**d + 1`` degree-``d`` cosets at ``c_n``."""
    backend = backend or BACKEND
    return _module(backend).phi_tally(n, d, field.q, *_tables(field, backend))


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])
