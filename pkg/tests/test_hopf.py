import random

import pytest

from uqwork.hopf import (
    TensorElement, ad, antipode, check_untwist_properties, coproduct, counit, mr_coinvariants,
    verify_hopf_axioms,
)
from uqwork.pbw import quantum_group, random_element
from uqwork.qscalar import Q, qpow

TYPES = ["A1", "A1xA1", "A2", "B2"]


def _neg(mu):
    return tuple(-x for x in mu)


def test_generator_coproducts():
    alg = quantum_group("A2")
    for i in range(2):
        a = alg.datum.alpha(i)
        E, F = alg.E(i), alg.F(i)
        assert coproduct(E) == TensorElement.pure(alg.K(a), E) + TensorElement.pure(E, alg.one())
        assert coproduct(F) == TensorElement.pure(alg.one(), F) + TensorElement.pure(F, alg.K(_neg(a)))
    K = alg.K((1, -1))
    assert coproduct(K) == TensorElement.pure(K, K)


def test_generator_antipodes_and_counits():
    alg = quantum_group("A1")
    a = alg.datum.alpha(0)
    assert antipode(alg.E(0)) == -(alg.K(_neg(a)) * alg.E(0))
    assert antipode(alg.F(0)) == -(alg.F(0) * alg.K(a))
    assert antipode(alg.K((3,))) == alg.K((-3,))
    assert counit(alg.E(0)) == 0
    assert counit(alg.K((2,)).scale(Q)) == Q


@pytest.mark.parametrize("label", TYPES)
def test_hopf_axioms_random(label):
    alg = quantum_group(label)
    rng = random.Random(11)
    sample = [random_element(alg, rng, max_degree=2) for _ in range(15)]
    sample += [alg.E(i) for i in range(alg.n)] + [alg.F(i) for i in range(alg.n)]
    rep = verify_hopf_axioms(sample)
    assert rep.ok, rep.witness


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_structure_maps_respect_products(label):
    alg = quantum_group(label)
    rng = random.Random(5)
    for _ in range(15):
        x, y = random_element(alg, rng, 2), random_element(alg, rng, 2)
        assert coproduct(x * y) == coproduct(x) * coproduct(y)
        assert antipode(x * y) == antipode(y) * antipode(x)
        assert counit(x * y) == counit(x) * counit(y)


@pytest.mark.parametrize("label", TYPES)
def test_antipode_squared_is_conjugation(label):
    alg = quantum_group(label)
    two_rho = tuple(2 * r for r in alg.datum.rho)
    rng = random.Random(2)
    for _ in range(10):
        x = random_element(alg, rng, 3)
        assert antipode(antipode(x)) == alg.K(_neg(two_rho)) * x * alg.K(two_rho)


def test_adjoint_actions():
    alg = quantum_group("A1")
    E, F, K = alg.E(0), alg.F(0), alg.K((1,))
    Kinv = alg.K((-1,))
    y = F * E + alg.K((2,))
    assert ad(K, y, "left") == K * y * Kinv
    assert ad(K, y, "right") == Kinv * y * K
    # ad_l(E)(F) = E F - K F K^-1 E
    assert ad(E, F, "left") == E * F - alg.K((2,)) * F * alg.K((-2,)) * E
    assert ad(alg.one(), y, "left") == y
    with pytest.raises(ValueError):
        ad(E, F, "middle")


def test_left_adjoint_is_an_action():
    alg = quantum_group("A2")
    rng = random.Random(4)
    for _ in range(8):
        x, y = random_element(alg, rng, 1, n_terms=2), random_element(alg, rng, 1, n_terms=2)
        z = random_element(alg, rng, 2)
        assert ad(x * y, z, "left") == ad(x, ad(y, z, "left"), "left")
        assert ad(x * y, z, "right") == ad(y, ad(x, z, "right"), "right")


def test_untwist_properties():
    alg = quantum_group("A1")
    E, F, K = alg.E(0), alg.F(0), alg.K((2,))
    c = (Q - Q.inverse()) ** 2
    casimir = (F * E).scale(c) + K.scale(Q) + alg.K((-2,)).scale(Q.inverse())
    assert casimir * E == E * casimir
    res = check_untwist_properties(alg, samples=10, central=casimir)
    assert res.status == "pass", res.witnesses


def test_coinvariant_examples():
    alg = quantum_group("A2")
    assert mr_coinvariants(alg, [0], (2, -1), max_f=1, window=2) == []
    (b,) = mr_coinvariants(alg, [0], (-1, 2), max_f=1, window=2)
    assert b == alg.K((1, -2)) * alg.E(1)
    (b,) = mr_coinvariants(alg, [0], (1, 1), max_f=1, window=2)
    E1, E2 = alg.E(0), alg.E(1)
    want = alg.K((-1, -1)) * (E2 * E1 - (E1 * E2).scale(qpow(-1)))
    assert b == want or b == -want


def test_coinvariants_are_coinvariant():
    alg = quantum_group("A2")
    (b,) = mr_coinvariants(alg, [0], (1, 1), max_f=1, window=2)
    # project the left leg onto the Levi part: nothing but 1 (x) b survives
    proj = {}
    for (l, r), c in coproduct(b).terms.items():
        if all(x - alg.n == 0 for x in l.e_word):
            proj[(l, r)] = c
    assert TensorElement(alg, proj) == TensorElement.pure(alg.one(), b)
