from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chernsub import pseries
from chernsub.pseries import Poly, TruncSeries, coeff_profile
from chernsub.symfunc import BigradedElement

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series(order, unit=False):
    coeffs = st.lists(rationals, min_size=order + 1, max_size=order + 1)
    if unit:
        coeffs = coeffs.filter(lambda c: c[0] != 0)
    return coeffs.map(lambda c: TruncSeries(c, order))


def test_todd():
    assert list(pseries.todd_series(4)) == [1, Fraction(1, 2), Fraction(1, 12), 0,
                                            Fraction(-1, 720)]


def test_todd_reciprocal_is_inverse():
    assert pseries.todd_series(6) * pseries.todd_reciprocal(6) == TruncSeries([1], 6)


def test_catalan_inverse():
    x = TruncSeries.variable(6)
    inv = (x + x * x).comp_inverse()
    assert list(inv) == [0, 1, -1, 2, -5, 14, -42]


@given(series(5, unit=True))
def test_inverse_property(s):
    assert s * s.inverse() == TruncSeries([1], 5)


@given(series(5).filter(lambda s: s[1] != 0).map(lambda s: TruncSeries([0] + list(s)[1:], 5)))
@settings(max_examples=50)
def test_comp_inverse_property(s):
    x = TruncSeries.variable(5)
    assert s.compose(s.comp_inverse()) == x
    assert s.comp_inverse().compose(s) == x


@given(series(4), series(4), series(4))
@settings(max_examples=50)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(series(5).map(lambda s: TruncSeries([0] + list(s)[1:], 5)))
@settings(max_examples=40)
def test_exp_log(s):
    assert s.exp().log() == s


def test_chi_y_specializations():
    y0 = pseries.chi_y_Q(5).map(lambda p: p(0))
    assert y0 == pseries.todd_series(5)
    # y = 1 gives x / tanh(x)
    y1 = pseries.chi_y_Q(5).map(lambda p: p(1))
    assert y1 == pseries.signature_tangent(5)


def test_signature_tangent():
    assert list(pseries.signature_tangent(4)) == [1, 0, Fraction(1, 3), 0, Fraction(-1, 45)]


def test_ahat_scaled_is_16k_ahat():
    scaled = pseries.ahat_scaled_normal(6)
    plain = pseries.ahat_normal(6)
    for k in range(7):
        assert scaled[k] == plain[k] * 4 ** k


def test_t_tau_low_terms():
    s = pseries.t_tau_series(3)
    assert s[1] == BigradedElement.hz(1) + BigradedElement.hy(1)
    t1 = pseries.t1_series(3)
    assert t1[2] == BigradedElement.hz(2) + BigradedElement.hy(1) * BigradedElement.hz(1)
    assert pseries.tb_series(3)[1] == BigradedElement.scalar(Fraction(-1, 2)) + BigradedElement.hy(1)


def test_coeff_profile():
    s = TruncSeries([1, 2, 3], 2)
    assert coeff_profile(s, (1, 1)) == 4
    assert coeff_profile(s, (2,)) == 3
    assert coeff_profile(s, ()) == 1


def test_poly():
    y = Poly.gen("y")
    p = (1 + y) ** 3
    assert list(p.coeffs) == [1, 3, 3, 1]
    assert p.divexact(1 + y) == (1 + y) ** 2
    assert p(1) == 8
    assert repr(1 - y + y * y) == "1 - y + y^2"
    with pytest.raises(ValueError):
        (1 + y * y).divexact(1 + y)
