from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qbax.coeff import Coefficient, QLM


def q(power=1, scale=1):
    return Coefficient.param("q", power, scale=scale)


def lam(power=1, scale=1):
    return Coefficient.param("lam", power, scale=scale)


def test_basic_arithmetic():
    x = q() + lam()
    sq = x * x
    assert sq == q(2) + lam() * q() * Coefficient.rational(2) + lam(2)
    assert (sq - sq).is_zero()
    assert Coefficient.one().is_one()
    assert not (q() - q(1)).terms


def test_rational_and_monomial_builders():
    half = Coefficient.rational(Fraction(1, 2))
    assert half.constant_value() == Fraction(1, 2)
    m = Coefficient.monomial(QLM, 3, q=2, lam=-1)
    assert m.terms == {(2, -1, 0): Fraction(3)}
    assert Coefficient.rational(0).is_zero()
    assert Coefficient.param("q", 5, scale=0).is_zero()


def test_constant_value_rejects_nonconstant():
    with pytest.raises(ValueError):
        q().constant_value()
    with pytest.raises(ValueError):
        (Coefficient.one() + q()).constant_value()


def test_negative_powers_and_inverse():
    qinv = q(-1)
    assert q() * qinv == Coefficient.one()
    assert q() ** -3 == q(-3)
    m = Coefficient.monomial(QLM, Fraction(2, 3), q=1, mu=2)
    assert m * m.monomial_inverse() == Coefficient.one()
    with pytest.raises(ValueError):
        (q() + lam()).monomial_inverse()
    with pytest.raises(ValueError):
        (q() + lam()) ** -1


def test_conj_param_inverts_one_variable():
    c = q(2) + lam(3) * q(-1)
    cc = c.conj_param("q")
    assert cc == q(-2) + lam(3) * q(1)
    assert cc.conj_param("q") == c


def test_spread_param():
    c = lam(2, scale=5)
    # substitution lam -> lam*mu
    assert c.spread_param("lam", ("lam", "mu")) == Coefficient.monomial(
        QLM, 5, lam=2, mu=2)
    # plain rename lam -> mu
    assert c.spread_param("lam", ("mu",)) == Coefficient.param("mu", 2, scale=5)
    # collapse lam -> nothing (evaluation at lam = 1), terms merge
    merged = (lam(1) + lam(-1)).spread_param("lam", ())
    assert merged == Coefficient.rational(2)


def test_coefficient_of_and_degrees():
    c = q() * lam(2) + q(3) * lam(2) + lam(-1)
    assert c.param_degrees("lam") == {2, -1}
    assert c.coefficient_of("lam", 2) == q() + q(3)
    assert c.coefficient_of("lam", 0).is_zero()


def test_mixed_variable_sets_raise():
    a = Coefficient.param("q")
    b = Coefficient.param("beta", vars=("beta", "lam"))
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


def test_evaluate():
    c = q(2) * lam(-1) + Coefficient.rational(Fraction(1, 4))
    got = c.evaluate({"q": 2j, "lam": 0.5})
    assert abs(got - ((2j) ** 2 / 0.5 + 0.25)) < 1e-14
    with pytest.raises(KeyError):
        q().evaluate({"lam": 1.0})
    # unused variables do not need values
    assert lam().evaluate({"lam": 3.0}) == 3.0


# ---------------------------------------------------------------------------
# algebraic laws on random elements
# ---------------------------------------------------------------------------

@st.composite
def coefficients(draw):
    n = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n):
        expo = tuple(draw(st.integers(-3, 3)) for _ in QLM)
        terms[expo] = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 7)))
    return Coefficient(QLM, terms)


@given(coefficients(), coefficients(), coefficients())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a  # coefficients are central
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Coefficient.zero()


@given(coefficients(), coefficients())
def test_evaluate_is_a_homomorphism(a, b):
    point = {"q": 0.7 + 0.2j, "lam": 1.3 - 0.4j, "mu": 0.9j}
    pa, pb = a.evaluate(point), b.evaluate(point)
    assert (a + b).evaluate(point) == pytest.approx(pa + pb, abs=1e-9)
    assert (a * b).evaluate(point) == pytest.approx(pa * pb, rel=1e-9, abs=1e-9)


@given(coefficients())
def test_conj_is_an_involution(a):
    assert a.conj_param("q").conj_param("q") == a
