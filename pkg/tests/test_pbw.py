import random

import pytest

from uqwork.pbw import (
    CutoffExceeded, build_presentation, complete, graded_dimension, pbw_oracle, qbinom,
    quantum_group, random_element, verify_certificate,
)
from uqwork.qscalar import Q, qint, qpow
from uqwork.rootdata import cartan

TYPES = ["A1", "A1xA1", "A2", "B2"]


def _cartan_part(alg):
    one = alg.one()
    n = alg.n
    K = [alg.K(alg.datum.alpha(i)) for i in range(n)]
    Kinv = [alg.K(tuple(-x for x in alg.datum.alpha(i))) for i in range(n)]
    return one, K, Kinv


def test_a1_ef_relation():
    alg = quantum_group("A1")
    one, K, Kinv = _cartan_part(alg)
    comm = alg.E(0) * alg.F(0) - alg.F(0) * alg.E(0)
    assert comm == (K[0] - Kinv[0]).scale((Q - Q.inverse()).inverse())


def test_a1_completion_adds_nothing():
    sys = build_presentation(cartan("A1"), 8)
    done = complete(sys)
    assert len(done.rules) == len(sys.rules)
    assert done.unbounded


@pytest.mark.parametrize("label", TYPES)
def test_completion_idempotent_and_certified(label):
    alg = quantum_group(label)
    again = complete(alg.system)
    assert again.rule_hash() == alg.system.rule_hash()
    assert verify_certificate(alg.system) == []


def test_torus_conjugation_uses_d_pairing():
    alg = quantum_group("A1")
    x = alg.K((1,)) * alg.E(0) * alg.K((-1,))
    assert x == alg.E(0).scale(Q)


def test_commuting_factors():
    alg = quantum_group("A1xA1")
    assert alg.E(0) * alg.F(1) == alg.F(1) * alg.E(0)


def test_torus_multiplication():
    alg = quantum_group("A2")
    assert alg.K((1, 0)) * alg.K((2, -1)) == alg.K((3, -1))
    assert alg.K((1, 0)) * alg.K((-1, 0)) == alg.one()


@pytest.mark.parametrize("label", TYPES)
def test_q_serre_relations(label):
    alg = quantum_group(label)
    D = alg.datum
    for i in range(alg.n):
        for j in range(alg.n):
            if i == j:
                continue
            m = 1 - D.cartan_matrix[i][j]
            d = D.symmetrizers[i]
            for gen in (alg.E, alg.F):
                total = alg.zero()
                for k in range(m + 1):
                    word = gen(i) ** (m - k) * gen(j) * gen(i) ** k
                    c = qbinom(m, k, d)
                    total = total + (word.scale(c) if k % 2 == 0 else -word.scale(c))
                assert total.is_zero(), (label, i, j)


def test_a2_serre_example():
    alg = quantum_group("A2")
    E1, E2 = alg.E(0), alg.E(1)
    assert (E1 * E1 * E2 - (E1 * E2 * E1).scale(qint(2)) + E2 * E1 * E1).is_zero()


@pytest.mark.parametrize("label", TYPES)
def test_graded_dimensions_match_pbw_count(label):
    alg = quantum_group(label)
    for d in range(7):
        assert graded_dimension(alg, "E", d) == pbw_oracle(alg.datum, d)
        assert graded_dimension(alg, "F", d) == pbw_oracle(alg.datum, d)


def test_root_degree_dimension():
    alg = quantum_group("A2")
    assert graded_dimension(alg, "E", (1, 1)) == 2
    assert graded_dimension(alg, "E", (2, 1)) == 2
    assert pbw_oracle(alg.datum, (1, 1)) == 2


def test_a2_total_degree_table():
    alg = quantum_group("A2")
    assert [graded_dimension(alg, "E", d) for d in range(6)] == [1, 2, 4, 6, 9, 12]


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_associativity_and_unit(label):
    alg = quantum_group(label)
    rng = random.Random(7)
    for _ in range(25):
        a, b, c = (random_element(alg, rng, max_degree=2) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * alg.one() == a == alg.one() * a
        assert a * (b + c) == a * b + a * c


def test_weight_additivity():
    alg = quantum_group("A2")
    rng = random.Random(3)
    for _ in range(20):
        a = random_element(alg, rng, n_terms=1)
        b = random_element(alg, rng, n_terms=1)
        if a.is_zero() or b.is_zero():
            continue
        (wa,), (wb,) = a.weights(), b.weights()
        prod = a * b
        if not prod.is_zero():
            assert prod.weights() == {tuple(x + y for x, y in zip(wa, wb))}


def test_normalize_free_word():
    alg = quantum_group("A1")
    x = alg.normalize([("E", 0), ("K", (2,)), ("F", 0)])
    assert x == alg.E(0) * alg.K((2,)) * alg.F(0)
    with pytest.raises(ValueError):
        alg.normalize([("X", 0)])


def test_cutoff_guard():
    sys = build_presentation(cartan("A2"), 2)
    with pytest.raises(ValueError):
        complete(sys, 1)


def test_cutoff_exceeded_when_bounded():
    alg = quantum_group("A2", 3)
    if alg.system.unbounded:
        pytest.skip("completion terminated, normal forms hold in every degree")
    with pytest.raises(CutoffExceeded):
        graded_dimension(alg, "E", 10)


def test_qbinom_values():
    assert qbinom(2, 1) == qint(2)
    assert qbinom(3, 1) == qint(3)
    assert qbinom(4, 2) == qint(4) * qint(3) / qint(2)
    assert qbinom(2, 1, 2) == qpow(2) + qpow(-2)
