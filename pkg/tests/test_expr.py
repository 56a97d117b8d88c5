import pytest

from uqwork.expr import ParseError, parse_expr
from uqwork.pbw import quantum_group
from uqwork.qscalar import Q


@pytest.fixture(scope="module")
def a1():
    return quantum_group("A1")


@pytest.fixture(scope="module")
def a2():
    return quantum_group("A2")


def test_commutator(a1):
    got = parse_expr(a1, "E F - F E")
    want = (a1.K((2,)) - a1.K((-2,))).scale((Q - Q.inverse()).inverse())
    assert got == want
    assert parse_expr(a1, "E*F - F*E") == got
    assert parse_expr(a1, "E1 F1 - F1 E1") == got


def test_scalars_and_division(a1):
    assert parse_expr(a1, "(q - q^-1) E / (q - q^-1)") == a1.E(0)
    assert parse_expr(a1, "2 q^2 K[2]") == a1.K((2,)).scale(Q * Q * 2)
    assert parse_expr(a1, "-E + E") == a1.zero()


def test_powers_and_torus(a2):
    assert parse_expr(a2, "E1^2 E2 - (q + q^-1) E1 E2 E1 + E2 E1^2").is_zero()
    assert parse_expr(a2, "K[1,0] K[-1,0]") == a2.one()


@pytest.mark.parametrize("text,pos", [("E1 + ", 5), ("E3", 0), ("K[1]", 0), ("E1 / F1", 5),
                                      ("F1^-1", 3), ("E1 $", 3), ("(E1", 3), ("", 0)])
def test_errors_carry_positions(a2, text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(a2, text)
    assert info.value.pos == pos


def test_rank_two_needs_index(a2):
    with pytest.raises(ParseError):
        parse_expr(a2, "E F")
