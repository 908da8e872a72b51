import cmath
import random
from fractions import Fraction

import pytest

from hecke_graphs.finite_field import FieldSpec
from hecke_graphs.forms import (
    M_X,
    CuspFunction,
    cusp_space_dim,
    effective_degree_multisets,
    eigenfunction_on_graph,
    eisenstein_eigenvalue,
    extend_along_cusp,
    is_eigenfunction,
    toroidal_space_dim,
)
from hecke_graphs.hecke_graph import WindowError, graph_phi


def test_extend_examples():
    q = 3
    assert extend_along_cusp(q + 1, 1, 1, q, 6).values == (1,) * 7
    assert extend_along_cusp(-(q + 1), 1, -1, q, 6).values == tuple((-1) ** n for n in range(7))
    assert extend_along_cusp(0, 0, 1, 2, 6).values == (0, 1, 0, -2, 0, 4, 0)


def test_extend_complex_mode():
    f = extend_along_cusp(1j, 1, 1j, 2, 4, mode="complex")
    assert all(isinstance(v, complex) for v in f.values)


def test_constant_eigenfunction(field):
    g = graph_phi(field, 1, 8)
    basis = eigenfunction_on_graph(g, field.q + 1)
    assert len(basis) == 1
    assert basis[0].is_multiple_of(CuspFunction(8, (Fraction(1),) * 9))


def test_eigen_c0_equation(f3):
    g = graph_phi(f3, 1, 8)
    (f,) = eigenfunction_on_graph(g, 4)
    assert f[1] / f[0] == 1


def test_eigen_matches_recursion(f3):
    rng = random.Random(5)
    g = graph_phi(f3, 1, 10)
    for _ in range(10):
        lam = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        (f,) = eigenfunction_on_graph(g, lam)
        ref = extend_along_cusp(lam, 1, lam / 4, 3, 10)
        assert f.is_multiple_of(ref)


def test_eigen_complex_mode(f2):
    g = graph_phi(f2, 1, 8)
    (f,) = eigenfunction_on_graph(g, 3, mode="complex", tol=1e-9)
    assert f.is_multiple_of(CuspFunction(8, (1 + 0j,) * 9), tol=1e-8)


def test_eigen_window_too_small(f2):
    with pytest.raises(WindowError):
        eigenfunction_on_graph(graph_phi(f2, 3, 5), 9)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_residue_eigenfunctions(f2, d):
    g = graph_phi(f2, d, 4 * d)
    qd = 2**d
    assert is_eigenfunction(g, [1] * (g.window + 1), qd + 1)
    alt = [(-1) ** n for n in range(g.window + 1)]
    assert is_eigenfunction(g, alt, -(qd + 1)) == (d % 2 == 1)


def test_eisenstein():
    for qx in (2, 3, 4, 8):
        assert abs(eisenstein_eigenvalue(qx ** -0.5, qx) - (qx + 1)) < 1e-10
        assert abs(eisenstein_eigenvalue(-(qx ** -0.5), qx) + (qx + 1)) < 1e-10
        assert abs(eisenstein_eigenvalue(1, qx) - 2 * cmath.sqrt(qx)) < 1e-10
    assert eisenstein_eigenvalue(Fraction(1, 2), 4, mode="exact") == 5
    with pytest.raises(ValueError):
        eisenstein_eigenvalue(1, 2, mode="exact")
    with pytest.raises(ZeroDivisionError):
        eisenstein_eigenvalue(0, 2)


def test_effective_multisets():
    assert effective_degree_multisets(3) == [(), (1,), (1, 1), (1, 1, 1)]
    assert (1, 2) in effective_degree_multisets(4, (1, 2))


def test_cusp_space(f2, f3):
    assert M_X == 0
    assert cusp_space_dim(f2, 5, 12).dimension == 0
    res = cusp_space_dim(f3, 0, 2)
    assert res.dimension == 0 and len(res.conditions) == 1
    assert res.conditions[0].coeffs == {0: 1}
    assert cusp_space_dim(f3, 0, 2, support=[0, 1]).dimension == 1


def test_toroidal_space(f2):
    res = toroidal_space_dim(f2, 6, 12)
    assert res.dimension == 0
    assert [a for _, a in res.induction] == [1] + [3] * 6
    assert toroidal_space_dim(f2, 6, 12, scale=Fraction(-7, 3)).dimension == 0
    assert toroidal_space_dim(f2, 0, 0).dimension == 0


def test_spaces_refuse_small_window(f2):
    with pytest.raises(WindowError):
        cusp_space_dim(f2, 5, 9)
    with pytest.raises(WindowError):
        toroidal_space_dim(f2, 5, 9)


def test_toroidal_with_degree_two_places(f3):
    assert toroidal_space_dim(f3, 4, 8, place_degrees=(1, 2)).dimension == 0
