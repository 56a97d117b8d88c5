import pytest

from uqwork.linalg import span_equal
from uqwork.pbw import quantum_group
from uqwork.qscalar import ONE, Q, qint, qpow, qs_inflate
from uqwork.repr import (
    DepthExceeded, ModuleElement, VermaModule, char_value, fin_generators_sl2, find_central_elements,
    finite_dim_irrep, hc_eval, hc_orbit_check, invariant_subspace_search, lattice_denominator,
    parabolic_verma_check, sl2_casimir, verma_apply,
)
from uqwork.rootdata import ParabolicSubset, SignChar, TorusChar, cartan


def _v(M):
    return ModuleElement(M.hw_vector())


@pytest.mark.parametrize("m", range(-3, 5))
def test_ef_on_highest_weight_vector(m):
    alg = quantum_group("A1")
    M = VermaModule(alg, TorusChar.q_power((m,)), 3)
    v = _v(M)
    assert verma_apply(M, alg.E(0), v).is_zero()
    got = verma_apply(M, alg.E(0) * alg.F(0), v)
    assert got == v.scale(qs_inflate(qint(m), M.D))


def test_lattice_denominators():
    assert lattice_denominator(cartan("A1")) == 2
    assert lattice_denominator(cartan("A2")) == 3
    assert char_value(cartan("A1"), TorusChar.q_power((3,)), (2,), 2) == qpow(6)
    sig = TorusChar(SignChar((-1,)), (0,))
    assert char_value(cartan("A1"), sig, (1,), 2) == -ONE


def test_verma_is_a_module():
    alg = quantum_group("A2")
    M = VermaModule(alg, TorusChar.q_power((1, -2)), 4)
    v = _v(M)
    E1, E2, F1, F2 = alg.E(0), alg.E(1), alg.F(0), alg.F(1)
    for x, y in [(E1, F2), (F1, F2), (E2, F1 * F2), (E1 * E2, F2 * F1)]:
        lhs = verma_apply(M, x * y, v)
        rhs = verma_apply(M, x, verma_apply(M, y, v))
        assert lhs == rhs


def test_depth_guard():
    alg = quantum_group("A1")
    M = VermaModule(alg, TorusChar.q_power((0,)), 1)
    with pytest.raises(DepthExceeded):
        verma_apply(M, alg.F(0) ** 2, _v(M))


def test_verma_multiplicities_follow_kostant():
    alg = quantum_group("A2")
    M = VermaModule(alg, TorusChar.q_power((0, 0)), 4)
    mult = M.weight_multiplicities()
    assert mult[(1, 1)] == 2 and mult[(2, 2)] == 3 and mult[(2, 1)] == 2


def test_casimir_central_and_its_eigenvalue():
    alg = quantum_group("A1")
    z = sl2_casimir(alg)
    for g in (alg.E(0), alg.F(0), alg.K((1,))):
        assert z * g == g * z
    den = (Q - Q.inverse()) ** 2
    for m in range(-4, 5):
        want = (qpow(m + 1) + qpow(-m - 1)) / den
        assert hc_eval(z, TorusChar.q_power((m,))) == want
        assert hc_eval(z, TorusChar.q_power((m,))) == hc_eval(z, TorusChar.q_power((-m - 2,)))
    assert hc_eval(z, TorusChar.q_power((1,))) != hc_eval(z, TorusChar.q_power((2,)))


def test_half_integral_values_need_root():
    alg = quantum_group("A1")
    with pytest.raises(ValueError):
        hc_eval(alg.K((1,)), TorusChar.q_power((1,)))
    assert hc_eval(alg.K((1,)), TorusChar.q_power((1,)), root=True) == Q


def test_detected_centre_in_rank_one():
    alg = quantum_group("A1")
    found = find_central_elements(alg, 2, 2)
    assert len(found) == 2
    z = sl2_casimir(alg)
    assert span_equal([c.value.terms for c in found], [alg.one().terms, z.terms])


@pytest.mark.parametrize("label,mu,dim", [("A1", (1,), 2), ("A1", (2,), 3), ("A2", (1, 0), 3),
                                          ("A2", (0, 1), 3), ("A2", (1, 1), 8), ("B2", (0, 1), 4)])
def test_finite_irreps(label, mu, dim):
    alg = quantum_group(label)
    V = finite_dim_irrep(alg, mu)
    assert V.dim == dim
    gens = [alg.E(i) for i in range(alg.n)] + [alg.F(i) for i in range(alg.n)]
    assert invariant_subspace_search(V, gens) == []


def test_singular_vector_in_reducible_verma():
    # M_{q^1} truncated at depth 3 contains the singular vector F^2 v
    alg = quantum_group("A1")
    M = VermaModule(alg, TorusChar.q_power((1,)), 3)
    F2v = M.apply(alg.F(0) ** 2, M.hw_vector())
    assert M.apply(alg.E(0), F2v) == {}


def test_irrep_modules_are_representations():
    alg = quantum_group("A2")
    V = finite_dim_irrep(alg, (1, 1))
    E1, F1, E2 = alg.E(0), alg.F(0), alg.E(1)
    for w in V.basis:
        vec = {w: ONE}
        assert V.apply(E1 * F1, vec) == V.apply(E1, V.apply(F1, vec))
        assert V.apply(E2 * E1, vec) == V.apply(E2, V.apply(E1, vec))


def test_hc_orbit_check_rank_one():
    alg = quantum_group("A1")
    res = hc_orbit_check(alg, [sl2_casimir(alg)], samples=10)
    assert res.status == "pass", res.witnesses


def test_fin_generators():
    alg = quantum_group("A1")
    g = fin_generators_sl2(alg)
    assert set(g) == {"1", "KF", "K", "E", "z"}


def test_parabolic_verma_borel_matches_verma():
    alg = quantum_group("A1")
    res = parabolic_verma_check(alg, ParabolicSubset(), 3, lam=TorusChar.q_power((3,)))
    assert res.status == "pass", res.witnesses


def test_parabolic_verma_a2():
    alg = quantum_group("A2")
    res = parabolic_verma_check(alg, ParabolicSubset([0]), 2)
    assert res.status == "pass", res.witnesses
