import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import P
from dualrs import MINUS_INF, Poly, make_field, monic_gcd
from dualrs.errors import (
    BothZero,
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    LeadingCoeffOfZero,
    NegativeShift,
)

GF7 = make_field(7, 1, alpha=3)
GF16 = make_field(2, 4)


def polys(field, max_deg=8):
    return st.lists(st.integers(0, field.q - 1), max_size=max_deg + 1).map(
        lambda cs: Poly(field, cs))


def test_ring_examples(gf7):
    assert P(gf7, 4, 1) * P(gf7, 1) == P(gf7, 4, 1)
    assert P(gf7, -3 % 7, 1) * P(gf7, -2 % 7, 1) == P(gf7, 6, 2, 1)
    assert P(gf7, 3, 0, 1) + P(gf7, 0, 0, 6) == P(gf7, 3)


def test_normalization(gf7):
    assert P(gf7, 1, 0, 0).coeffs == (1,)
    assert P(gf7, 0, 0).coeffs == ()


def test_shift(gf7):
    assert P(gf7, 1, 1).shift(2) == P(gf7, 0, 0, 1, 1)
    assert Poly.zero(gf7).shift(5).is_zero()
    assert P(gf7, 3).shift(1) == P(gf7, 0, 3)
    with pytest.raises(NegativeShift):
        P(gf7, 1).shift(-1)


def test_degree_and_coefficients(gf7):
    assert Poly.zero(gf7).deg == MINUS_INF
    assert MINUS_INF < -1
    assert P(gf7, 1, 0, 3).lc() == 3
    assert P(gf7, 0, 0, 0, 0, 3, 1).coeff(2) == 0
    assert P(gf7, 1, 2).coeff(-1) == 0 and P(gf7, 1, 2).coeff(9) == 0
    with pytest.raises(LeadingCoeffOfZero):
        Poly.zero(gf7).lc()


def test_divmod_examples(gf7):
    x2m1 = P(gf7, 6, 0, 1)
    xm1 = P(gf7, 6, 1)
    assert divmod(x2m1, xm1) == (P(gf7, 1, 1), Poly.zero(gf7))
    assert divmod(xm1, x2m1) == (Poly.zero(gf7), xm1)
    a = P(gf7, 6, 0, 0, 0, 0, 0, 1)
    b = P(gf7, 0, 0, 6, 2, 3, 1)
    q, r = divmod(a, b)
    assert q.deg == 1 and r.deg <= 4
    assert q * b + r == a
    with pytest.raises(DivisionByZero):
        divmod(a, Poly.zero(gf7))


def test_eval_examples(gf7):
    assert P(gf7, 4, 1)(3) == 0
    assert all(Poly.zero(gf7)(c) == 0 for c in range(7))
    assert P(gf7, 0, 0, 6, 2, 3, 1)(1) == 5


def test_derivative_examples(gf7):
    assert P(gf7, 1, 2, 0, 1).derivative() == P(gf7, 2, 0, 3)
    assert Poly.monomial(gf7, 7).derivative().is_zero()
    assert P(gf7, 4, 1).derivative() == P(gf7, 1)


def test_reverse_examples(gf7):
    assert P(gf7, 1, 4).reverse(1) == P(gf7, 4, 1)
    assert P(gf7, 5).reverse(0) == P(gf7, 5)
    a = P(gf7, 5, 3, 1)
    assert a.reverse(2) == P(gf7, 1, 3, 5)
    assert a.reverse(2).reverse(2) == a
    with pytest.raises(DegreeTooLarge):
        a.reverse(1)


def test_monic_gcd_examples(gf7):
    assert monic_gcd(P(gf7, 6, 0, 1), P(gf7, 6, 1)) == P(gf7, 6, 1)
    a = P(gf7, 2, 0, 3)
    assert monic_gcd(a, Poly.zero(gf7)) == a.monic()
    x6m1 = Poly.x_n_minus_1(gf7, 6)
    assert monic_gcd(x6m1, P(gf7, 4, 1)) == P(gf7, 4, 1)
    with pytest.raises(BothZero):
        monic_gcd(Poly.zero(gf7), Poly.zero(gf7))


def test_field_mismatch(gf7, gf5):
    with pytest.raises(FieldMismatch):
        P(gf7, 1) + P(gf5, 1)


def test_text_form(gf7):
    assert P(gf7, 6, 0, 0, 2).to_text() == "6,0,0,2"
    assert Poly.parse(gf7, "6,0,0,2") == P(gf7, 6, 0, 0, 2)
    assert Poly.zero(gf7).to_text() == "0"
    assert Poly.parse(gf7, "0").is_zero()


@pytest.mark.parametrize("field", [GF7, GF16], ids=["gf7", "gf16"])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_ring_properties(field, data):
    a, b, c = (data.draw(polys(field)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert a * b == b * a
    # derivative: linear and Leibniz
    assert (a + b).derivative() == a.derivative() + b.derivative()
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
    assume(b)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.deg < b.deg


@settings(max_examples=80, deadline=None)
@given(a=polys(GF7), extra=st.integers(0, 4))
def test_reverse_degree(a, extra):
    t = max(a.deg, 0) + extra
    rev = a.reverse(t)
    assert rev.deg <= t
    assert (rev.deg == t) == (a.coeff(0) != 0)
    if a:
        assert rev.reverse(t) == a
