import pytest

from uqwork.finiteness import (
    ad_orbit_span, big_subalgebra_identities, big_subalgebra_span_check, check_corollary_triangular,
    check_nilradical, check_triangular, construct_nilradical, integrable_part_basis, nilradical_roots,
    remark_b_annihilation_check, remark_b_ideal_check, specialize_q1_check,
)
from uqwork.linalg import in_span
from uqwork.pbw import pbw_oracle, quantum_group
from uqwork.rootdata import ParabolicSubset, cartan


@pytest.fixture(scope="module")
def a1():
    return quantum_group("A1")


@pytest.fixture(scope="module")
def a2():
    return quantum_group("A2")


def test_ad_orbit_of_K_alpha_is_finite(a1):
    res = ad_orbit_span(a1.K((2,)), [a1.E(0), a1.F(0)], 6)
    assert res.status == "finite"
    # End V(omega) = V(0) + V(2): the Casimir supplies the trivial summand
    assert res.span_dimension == 4


@pytest.mark.parametrize("cap", [2, 4, 6])
def test_ad_orbit_of_K_omega_never_closes(a1, cap):
    assert ad_orbit_span(a1.K((1,)), [a1.E(0), a1.F(0)], cap).status == "cap_exceeded"


def test_ad_orbit_of_F_never_closes(a1):
    assert ad_orbit_span(a1.F(0), [a1.E(0), a1.F(0)], 6).status == "cap_exceeded"


def test_integrable_part_rank_one(a1):
    basis = [b.terms for b in integrable_part_basis(a1, (0,), 1, 2)]
    K = a1.K((2,))
    for x in (a1.one(), K, K * a1.F(0), a1.E(0)):
        assert in_span(basis, x.terms)
    for x in (a1.F(0), a1.K((1,)), a1.K((-2,))):
        assert not in_span(basis, x.terms)


def test_integrable_part_for_the_torus_is_everything(a1):
    basis = integrable_part_basis(a1, (), 1, 1)
    assert len(basis) == 3 * 3


def test_integrable_part_a2_contains_root_vector(a2):
    basis = [b.terms for b in integrable_part_basis(a2, (0,), 1, 2)]
    assert in_span(basis, (a2.K((1, -2)) * a2.E(1)).terms)


def test_nilradical_roots():
    assert sorted(nilradical_roots(cartan("A2"), (0,))) == [(0, 1), (1, 1)]
    assert len(nilradical_roots(cartan("A2"), ())) == 3
    assert nilradical_roots(cartan("A2"), (0, 1)) == []


def test_nilradical_a1_borel(a1):
    N = construct_nilradical(a1, ParabolicSubset(), "r", 3)
    assert N.dims() == [1, 1, 1, 1]
    (b,) = N.weight_vector((1,))
    assert b == a1.K((-2,)) * a1.E(0)
    (b3,) = N.weight_vector((3,))
    assert in_span([b3.terms], (b * b * b).terms)
    assert check_nilradical(a1, N).status == "pass"


@pytest.mark.parametrize("side", ["r", "rbar"])
def test_nilradical_a2_maximal_parabolic(a2, side):
    N = construct_nilradical(a2, ParabolicSubset([0]), side, 3)
    # monomials in the two roots alpha_2 and alpha_1 + alpha_2
    assert N.dims() == [1, 1, 2, 2]
    res = check_nilradical(a2, N)
    assert res.status == "pass", res.witnesses


def test_nilradical_a2_full_matches_pbw(a2):
    N = construct_nilradical(a2, ParabolicSubset(), "r", 3)
    assert N.dims() == [pbw_oracle(a2.datum, d) for d in range(4)]


def test_triangular_rank_one(a1):
    res = check_triangular(a1, ParabolicSubset(), 4)
    assert res.status == "pass", res.witnesses


def test_triangular_a2(a2):
    res = check_triangular(a2, ParabolicSubset([0]), 3)
    assert res.status == "pass", res.witnesses


def test_corollary_triangular_a2(a2):
    res = check_corollary_triangular(a2, ParabolicSubset([0]), 2)
    assert res.status == "pass", res.witnesses


@pytest.mark.parametrize("levi", [(), (0,)])
def test_specialization_at_one(a2, levi):
    N = construct_nilradical(a2, ParabolicSubset(levi), "r", 3)
    res = specialize_q1_check(a2, N)
    assert res.status == "pass", res.witnesses


def test_specialization_rank_one(a1):
    res = specialize_q1_check(a1, construct_nilradical(a1, ParabolicSubset(), "r", 3))
    assert res.status == "pass", res.witnesses


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_big_subalgebra_identities(label):
    res = big_subalgebra_identities(quantum_group(label))
    assert res.status == "pass", res.witnesses


def test_big_subalgebra_span(a1):
    res = big_subalgebra_span_check(a1, 2, 4)
    assert res.status == "pass", res.witnesses


def test_remark_b(a2):
    P = ParabolicSubset([0])
    assert remark_b_ideal_check(a2, P, 2).status == "pass"
    assert remark_b_annihilation_check(a2, P, (0, 1)).status == "pass"
