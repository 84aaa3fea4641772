from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbase.errors import DegenerateScalar, ScalarParseError
from hopfbase.scalars import CyclotomicField, cyclotomic_polynomial, euler_phi, format_scalar

ORDERS = [3, 4, 5, 7, 8, 12]


def element(order):
    F = CyclotomicField(order)
    coeffs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=order)

    def build(cs):
        total = F.zero
        for k, c in enumerate(cs):
            total = total + F.zeta(k) * F.coerce(c)
        return total

    return coeffs.map(build)


@pytest.mark.parametrize("order", ORDERS)
def test_root_of_unity_order(order):
    F = CyclotomicField(order)
    z = F.zeta()
    assert z ** order == F.one
    assert all(z ** k != F.one for k in range(1, order))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 12])
def test_cyclotomic_polynomial_degree(n):
    assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_known_cyclotomic_polynomials():
    assert tuple(cyclotomic_polynomial(6)) == (1, -1, 1)
    assert tuple(cyclotomic_polynomial(5)) == (1, 1, 1, 1, 1)


def test_rational_field_uses_fractions():
    Q = CyclotomicField(1)
    assert isinstance(Q.parse("3/4"), Fraction)
    assert CyclotomicField(2).zeta() == -1


@pytest.mark.parametrize("order", [3, 5, 8])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(order, data):
    a, b, c = (data.draw(element(order)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * a.inverse() == CyclotomicField(order).one


@pytest.mark.parametrize("order", [1, 3, 4, 7])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_format_parse_roundtrip(order, data):
    F = CyclotomicField(order)
    a = data.draw(element(order)) if order > 1 else F.coerce(data.draw(st.fractions(max_denominator=9)))
    assert F.parse(format_scalar(a)) == a


def test_parse_literals():
    F = CyclotomicField(5)
    z = F.zeta()
    assert F.parse("1-2/3*z^2") == F.one - z ** 2 * F.coerce(Fraction(2, 3))
    assert F.parse("z^5") == F.one


def test_zero_inverse_raises():
    with pytest.raises(DegenerateScalar):
        CyclotomicField(5).zero.inverse()
    with pytest.raises(ZeroDivisionError):
        CyclotomicField(3).zero.inverse()


@pytest.mark.parametrize("text", ["1+*z", "z^", "2/0x"])
def test_parse_errors(text):
    with pytest.raises(ScalarParseError):
        CyclotomicField(5).parse(text)


def test_z_rejected_over_rationals():
    with pytest.raises(ScalarParseError):
        CyclotomicField(1).parse("z")
