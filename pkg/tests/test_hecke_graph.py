import pytest

from hecke_graphs.finite_field import FieldSpec
from hecke_graphs.hecke_graph import (
    HeckeGraph,
    WindowError,
    component_count,
    graph_add,
    graph_compose,
    graph_identity,
    graph_phi,
    graph_power,
    graph_scale,
    graph_subtract,
    graph_zero,
    neighbour_distance_check,
    phi_neighbours,
    phi_neighbours_xi,
    same_edges,
    verify_all,
    verify_components,
    verify_labels,
    verify_relation,
    verify_symmetry,
    verify_tail,
    verify_weight_sums,
)


def test_degree_one_stars(field):
    q = field.q
    assert phi_neighbours(field, 0, 1) == {1: q + 1}
    assert phi_neighbours(field, 2, 1) == {1: q, 3: 1}


def test_degree_two_and_three_stars(field):
    q = field.q
    assert phi_neighbours(field, 0, 2) == {0: q * q - q, 2: q + 1}
    assert phi_neighbours(field, 1, 2) == {1: q * q, 3: 1}
    assert phi_neighbours(field, 0, 3) == {1: q**3 - q, 3: q + 1}


def test_degree_fixtures_against_composition(field):
    # the pinned stars agree with Phi_x^2 - 2q and Phi_x^3 - 3q Phi_x
    q = field.q
    gx = graph_phi(field, 1, 6)
    two = graph_subtract(graph_power(gx, 2), graph_scale(2 * q, graph_identity(field, 6)))
    three = graph_subtract(graph_power(gx, 3), graph_scale(3 * q, gx))
    assert dict(two.out[0]) == phi_neighbours(field, 0, 2)
    assert dict(two.out[1]) == phi_neighbours(field, 1, 2)
    assert dict(three.out[0]) == phi_neighbours(field, 0, 3)


def test_xi_recipe_agrees(field):
    for n in range(10):
        assert phi_neighbours_xi(field, n) == phi_neighbours(field, n, 1)


def test_invalid_degree(f2):
    with pytest.raises(ValueError):
        graph_phi(f2, 0, 4)
    with pytest.raises(ValueError):
        phi_neighbours(f2, -1, 1)


def test_threads_do_not_change_result(f3, monkeypatch):
    g1 = graph_phi(f3, 3, 9, threads=1)
    monkeypatch.setenv("HECKE_GRAPHS_THREADS", "4")
    assert graph_phi(f3, 3, 9) == g1


def test_identity_and_zero(f2):
    assert graph_identity(f2, 3).edge_dict() == {(i, i): 1 for i in range(4)}
    assert len(graph_zero(f2, 3)) == 0
    gx = graph_phi(f2, 1, 10)
    assert graph_compose(graph_identity(f2, 9), gx).restrict(9) == gx.restrict(9)
    assert graph_compose(gx.restrict(9), graph_identity(f2, 10)) == gx.restrict(9)
    assert len(graph_compose(gx.restrict(5), graph_zero(f2, 6))) == 0


def test_add_and_scale(f2):
    gx = graph_phi(f2, 1, 8)
    assert graph_add(gx, graph_zero(f2, 8)).edge_dict() == gx.edge_dict()
    assert graph_add(gx, gx).edge_dict() == graph_scale(2, gx).edge_dict()
    assert dict(graph_scale(2, gx).out[0]) == {1: 6}
    g2 = graph_phi(f2, 2, 8)
    assert graph_add(gx, g2).edge_dict() == graph_add(g2, gx).edge_dict()
    assert len(graph_subtract(gx, gx)) == 0


def test_compose_examples(field):
    q = field.q
    gx = graph_phi(field, 1, 8)
    sq = graph_compose(gx.restrict(7), gx)
    assert dict(sq.out[0]) == {0: q * q + q, 2: q + 1}
    cube = graph_compose(gx.restrict(6), sq)
    assert dict(cube.out[0]) == {1: (q + 1) * q + (q + 1) ** 2 * q, 3: q + 1}


def test_compose_associative(f3):
    a, b, c = graph_phi(f3, 1, 4), graph_phi(f3, 2, 5), graph_phi(f3, 1, 7)
    left = graph_compose(graph_compose(a, b), c)
    right = graph_compose(a, graph_compose(b, c))
    assert left == right


def test_compose_window_precondition(f2):
    gx = graph_phi(f2, 1, 8)
    with pytest.raises(WindowError):
        graph_compose(gx, gx)


def test_power_window_bookkeeping(f2):
    gx = graph_phi(f2, 1, 12)
    assert graph_power(gx, 1) == gx
    assert graph_power(gx, 2).window == 11
    assert graph_power(gx, 3).window == 10
    assert graph_power(gx, 0) == graph_identity(f2, 12)
    with pytest.raises(WindowError):
        graph_power(graph_phi(f2, 1, 2), 5)


@pytest.mark.parametrize("k", [2, 3])
def test_relations(field, k):
    assert verify_relation(field, k, 12).passed


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_structure_suite(q, d):
    f = FieldSpec.from_q(q)
    g = graph_phi(f, d, 4 * d)
    for report in verify_all(g, d):
        assert report.passed, report.line()


def test_weight_sums_small_degrees(field):
    for d in range(1, 4):
        assert verify_weight_sums(graph_phi(field, d, 6)).value == field.q**d + 1


def test_tail_example(f2):
    g = graph_phi(f2, 4, 12)
    assert dict(g.out[7]) == {3: 16, 11: 1}
    assert verify_tail(g, 4).passed


def test_components(f2):
    assert component_count(graph_phi(f2, 2, 10)) == 2
    assert component_count(graph_phi(f2, 3, 12)) == 1
    with pytest.raises(WindowError):
        verify_components(graph_phi(f2, 3, 4), 3)


def test_labels_and_distance(f2):
    assert verify_labels(graph_phi(f2, 3, 12), 3).passed
    assert neighbour_distance_check(graph_phi(f2, 2, 10), 2).value == 2
    gx = graph_phi(f2, 1, 10)
    assert neighbour_distance_check(graph_power(gx, 3), 3).value == 3
    assert neighbour_distance_check(graph_identity(f2, 4), 0).value == 0


def test_symmetry_negative_control(f2):
    good = graph_phi(f2, 1, 6)
    broken = dict((v, dict(s)) for v, s in good.out.items())
    del broken[3][2]
    rep = verify_symmetry(HeckeGraph(f2, 6, 1, broken))
    assert not rep.passed and rep.violations == [(2, 3)]
    assert verify_symmetry(graph_phi(f2, 4, 12)).passed


def test_origins_outside_window_rejected(f2):
    with pytest.raises(ValueError):
        HeckeGraph(f2, 2, 1, {5: {4: 1}})


def test_same_edges_on_common_window(f2):
    assert same_edges(graph_phi(f2, 2, 5), graph_phi(f2, 2, 9))
