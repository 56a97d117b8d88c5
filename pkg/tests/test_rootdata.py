import itertools
from fractions import Fraction

import pytest

from uqwork.rootdata import (
    BudgetExceeded, ExtWeylElement, ParabolicSubset, SignChar, TorusChar, cartan, dot_action,
    ext_weyl_group, hc_orbit, pairing, predicates_check, weight_predicates, weights_of_irrep,
    weyl_dimension,
)

TYPES = ["A1", "A1xA1", "A2", "B2"]


def test_unknown_type():
    with pytest.raises(ValueError):
        cartan("G2")


@pytest.mark.parametrize("label,size", [("A1", 2), ("A1xA1", 4), ("A2", 6), ("B2", 8)])
def test_weyl_group_order(label, size):
    assert len(cartan(label).weyl_group) == size


@pytest.mark.parametrize("label,count", [("A1", 1), ("A1xA1", 2), ("A2", 3), ("B2", 4)])
def test_positive_root_count(label, count):
    assert len(cartan(label).positive_roots) == count


def test_pairings():
    a1, a2 = cartan("A1"), cartan("A2")
    assert pairing(a1, a1.alpha(0), a1.alpha(0)) == 2
    assert pairing(a2, a2.omega(0), a2.alpha(1), "d") == 0
    assert pairing(a1, a1.omega(0), a1.alpha(0), "d") == 1
    with pytest.raises(ValueError):
        pairing(a1, (1,), (1,), "other")


def test_short_roots_have_length_two():
    b2 = cartan("B2")
    lengths = sorted(b2.form(a, a) for a in b2.positive_roots)
    assert lengths[0] == 2


@pytest.mark.parametrize("label", TYPES)
def test_d_pairing_integral_on_root_lattice(label):
    D = cartan(label)
    for mu in itertools.product(range(-2, 3), repeat=D.rank):
        for i in range(D.rank):
            assert pairing(D, mu, D.alpha(i), "d").denominator == 1


def test_dot_action_a1():
    D = cartan("A1")
    s = ExtWeylElement(SignChar.trivial(1), (0,))
    e = ExtWeylElement(SignChar.trivial(1), ())
    for m in range(-4, 5):
        lam = TorusChar.q_power((m,))
        assert dot_action(D, s, lam) == TorusChar.q_power((-m - 2,))
        assert dot_action(D, e, lam) == lam
    sigma = ExtWeylElement(SignChar((-1,)), ())
    assert dot_action(D, sigma, TorusChar.q_power((0,))) == TorusChar(SignChar((-1,)), (0,))


@pytest.mark.parametrize("label", TYPES)
def test_dot_action_is_group_action(label):
    D = cartan(label)
    G = ext_weyl_group(D)
    samples = [TorusChar(s, mu) for s in D.sign_group for mu in [(1,) * D.rank, tuple(range(-1, D.rank - 1))]]
    for w1, w2 in itertools.product(G, repeat=2):
        w12 = w1.compose(w2, D)
        for lam in samples:
            assert dot_action(D, w1, dot_action(D, w2, lam)) == dot_action(D, w12, lam)


def test_hc_orbit_a1():
    D = cartan("A1")
    sig = SignChar((-1,))
    orbit = hc_orbit(D, TorusChar.q_power((3,)))
    assert orbit == {TorusChar.q_power((3,)), TorusChar.q_power((-5,)),
                     TorusChar(sig, (3,)), TorusChar(sig, (-5,))}


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_hc_orbits_partition(label):
    D = cartan(label)
    chars = [TorusChar(s, mu) for s in D.sign_group for mu in itertools.product(range(-3, 3), repeat=D.rank)]
    for a in chars:
        oa = hc_orbit(D, a)
        for b in chars:
            assert (b in oa) == (hc_orbit(D, b) == oa)


def test_predicate_examples():
    a1, a2 = cartan("A1"), cartan("A2")
    assert not weight_predicates(a1, TorusChar.q_power((-1,)), ParabolicSubset()).is_P_regular
    assert weight_predicates(a1, TorusChar.q_power((-1,)), ParabolicSubset([0])).is_P_regular
    assert weight_predicates(a2, TorusChar.q_power((0, 1)), ParabolicSubset([0])).is_P_character
    assert not weight_predicates(a2, TorusChar.q_power((1, 0)), ParabolicSubset([0])).is_P_character
    assert not weight_predicates(a2, TorusChar(SignChar((1, -1)), (0, 1)), ParabolicSubset([0])).is_P_character
    assert weight_predicates(a1, TorusChar.q_power((3,)), ParabolicSubset()).is_integral_dominant
    assert not weight_predicates(a1, TorusChar.q_power((-2,)), ParabolicSubset()).is_integral_dominant


def test_sign_twist_moves_singular_root():
    # s_1 fixes q^(-omega_1) but moves a sign twist with sigma(alpha_1) = -1
    D = cartan("A2")
    lam = (-1, 0)
    assert weight_predicates(D, TorusChar.q_power(lam), ParabolicSubset()).singular_roots == {0}
    twisted = TorusChar(SignChar((1, -1)), lam)
    assert weight_predicates(D, twisted, ParabolicSubset()).singular_roots == set()
    # in rank one every sign character is trivial on the root lattice
    A1 = cartan("A1")
    assert weight_predicates(A1, TorusChar(SignChar((-1,)), (-1,)), ParabolicSubset()).singular_roots == {0}


@pytest.mark.parametrize("label", TYPES)
def test_predicates_against_orbits(label):
    res = predicates_check(cartan(label), window=3)
    assert res.status == "pass", res.witnesses[:3]


def test_weights_of_irrep_examples():
    a1, a2 = cartan("A1"), cartan("A2")
    assert weights_of_irrep(a1, (1,)) == {(1,): 1, (-1,): 1}
    assert weights_of_irrep(a1, (0,)) == {(0,): 1}
    w = weights_of_irrep(a2, (1, 0))
    om = a2.omega(0)
    expected = {om, tuple(x - y for x, y in zip(om, a2.alpha(0))),
                tuple(x - y - z for x, y, z in zip(om, a2.alpha(0), a2.alpha(1)))}
    assert set(w) == expected and all(m == 1 for m in w.values())
    assert weights_of_irrep(a2, (1, 1))[(0, 0)] == 2


@pytest.mark.parametrize("label", TYPES)
def test_weights_match_weyl_dimension(label):
    D = cartan(label)
    for mu in itertools.product(range(3), repeat=D.rank):
        assert sum(weights_of_irrep(D, mu).values()) == weyl_dimension(D, mu)


def test_weyl_dimension_values():
    assert weyl_dimension(cartan("A2"), (1, 1)) == 8
    assert weyl_dimension(cartan("B2"), (0, 1)) == 4
    assert weyl_dimension(cartan("B2"), (1, 0)) == 5


def test_irrep_budget_and_domain():
    with pytest.raises(BudgetExceeded):
        weights_of_irrep(cartan("A2"), (6, 6))
    with pytest.raises(ValueError):
        weights_of_irrep(cartan("A1"), (-1,))


def test_weyl_vector_coordinates():
    for label in TYPES:
        D = cartan(label)
        assert D.rho == (1,) * D.rank
        assert D.height(D.alpha(0)) == Fraction(1)
