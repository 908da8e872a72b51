import pytest

from _oracles import perturb, rand_gamma, rand_k, rand_matrix, seeded, splitting_gap
from hecke_graphs.finite_field import FieldSpec, ProjPoint, projective_line
from hecke_graphs.laurent import LaurentPoly, valuation
from hecke_graphs.reduction import (
    Mat2,
    ReductionError,
    iwasawa,
    p_matrix,
    reduce,
    reduce_upper,
    xi_matrix,
)

F2 = FieldSpec.from_q(2)


def M(field, a, b, c, d):
    return Mat2.of(field, a, b, c, d)


def mono(field, k, c=1):
    return LaurentPoly.monomial(field, k, c)


def test_iwasawa_examples():
    one, zero = LaurentPoly.constant(F2, 1), LaurentPoly.zero(F2)
    ident = Mat2(one, zero, zero, one)
    assert iwasawa(ident) == ident
    swapped = iwasawa(Mat2(zero, one, one, zero))
    assert swapped.c.is_zero()
    m = Mat2(mono(F2, 1), zero, one, one)
    tri = iwasawa(m)
    assert tri.c.is_zero()
    assert valuation(tri.det()) == valuation(m.det()) == 1


def test_reduce_examples(field):
    one, zero = LaurentPoly.constant(field, 1), LaurentPoly.zero(field)
    assert reduce(Mat2(one, zero, zero, one)) == 0
    assert reduce(Mat2(one, zero, zero, mono(field, 1))) == 1
    assert reduce(Mat2(mono(field, 3), mono(field, 1), zero, one)) == 1
    for b in range(field.q):
        m = Mat2(one, LaurentPoly(field, {-1: b}), zero, one)
        assert reduce(m) == 0


def test_xi_neighbours_of_c0(field):
    p0 = p_matrix(field, 0)
    assert [reduce(p0 @ xi_matrix(field, w)) for w in projective_line(field)] == [1] * (field.q + 1)


def test_singular_rejected():
    zero = LaurentPoly.zero(F2)
    with pytest.raises((ValueError, ReductionError)):
        reduce(Mat2(mono(F2, 1), mono(F2, 2), zero, zero))


@pytest.mark.parametrize("q", [2, 3])
def test_idempotent_on_standard_representatives(q):
    f = FieldSpec.from_q(q)
    for n in range(51):
        assert reduce(p_matrix(f, n)) == n


def test_reduce_upper_negative_n():
    assert reduce_upper(-4, LaurentPoly.zero(F2)) == 4


@pytest.mark.parametrize("q", [2, 3, 4])
def test_well_defined_under_perturbation(q):
    f = FieldSpec.from_q(q)
    rng = seeded(100 + q)
    for _ in range(200):
        m = rand_matrix(f, rng)
        n = reduce(m)
        m2 = perturb(m, rng)
        assert reduce(m2) == n
        assert n % 2 == valuation(m.det()) % 2
        assert reduce(m2) % 2 == valuation(m2.det()) % 2


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_matches_sections_oracle(q):
    f = FieldSpec.from_q(q)
    rng = seeded(200 + q)
    for _ in range(60):
        m = rand_matrix(f, rng, -4, 4)
        assert reduce(m) == splitting_gap(m)


@pytest.mark.parametrize("q", [2, 3])
def test_oracle_on_disguised_representatives(q):
    f = FieldSpec.from_q(q)
    rng = seeded(300 + q)
    for _ in range(25):
        n = rng.randint(0, 7)
        m = rand_gamma(f, rng) @ p_matrix(f, n) @ rand_k(f, rng)
        assert reduce(m) == n == splitting_gap(m)
