from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dyckstat.polynomial import Poly
from dyckstat.series import (
    BadConstantTerm,
    DepthTooShallow,
    NonUnitConstantTerm,
    OrderMismatch,
    Series,
    TruncationUnsound,
    cf_eval,
    peak_height_levels,
    q_fact,
    q_int,
    substitute,
    z,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def catalan(order):
    zz = z(order + 1)
    return ((1 - (1 - 4 * zz).sqrt()) * Fraction(1, 2)).shift_down(1)


def test_basic_products():
    zz = z(3)
    assert ((1 + zz) * (1 - zz)).numbers() == [1, 0, -1, 0]
    a = 1 + 2 * zz
    assert a + Series.zero(3) == a


def test_catalan_functional_equation():
    c = catalan(6)
    assert c.numbers() == CATALAN
    assert z(6) * c * c + 1 == c


def test_inverse_examples():
    assert (1 - z(5)).inverse().numbers() == [1] * 6
    assert (1 - 2 * z(6)).inverse().numbers() == [2**n for n in range(7)]
    with pytest.raises(NonUnitConstantTerm):
        z(4).inverse()


def test_sqrt_examples():
    assert Series.one(4).sqrt() == Series.one(4)
    f = 1 - 4 * z(8)
    g = f.sqrt()
    assert g * g == f
    with pytest.raises(BadConstantTerm):
        z(4).sqrt()


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        z(3) + z(4)


def test_shift_down_rejects_low_terms():
    with pytest.raises(Exception):
        (1 + z(4)).shift_down(1)


def test_q_integers():
    assert q_int(1, 5).numbers() == [1, 0, 0, 0, 0, 0]
    assert q_int(3, 5).numbers() == [1, 1, 1, 0, 0, 0]
    assert q_fact(3, 5) == q_int(3, 5) * q_int(2, 5)
    assert q_fact(0, 3) == Series.one(3)


def test_substitute_identity_and_order():
    s = Poly.var("s")
    f = Series([1, s, s**2 + 1], 2)
    assert substitute(f, {"s": s}) == f
    assert substitute(f, {"s": 0}).numbers() == [1, 0, 1]
    assert substitute(f, {"s": z(2)}).numbers() == [1, 0, 2]
    with pytest.raises(TruncationUnsound):
        substitute(f, {"s": z(1)})


def _ones(k, m):
    return Series.one(m)


def test_cf_catalan_and_hill_free():
    assert cf_eval(peak_height_levels(_ones), 7, 6).numbers() == CATALAN

    def h(k, m):
        return Series.constant(0 if k == 1 else 1, m)

    assert cf_eval(peak_height_levels(h), 4, 3).numbers() == [1, 0, 1, 2]


def test_cf_depth_guard():
    with pytest.raises(DepthTooShallow):
        cf_eval(peak_height_levels(_ones), 6, 6)


def test_cf_depth_stability_sval_at_two():
    s = 2

    def rule(k, m):
        zz = z(m)
        return 1 + zz - zz / (1 - (s - 1) * (zz * q_int(k, m)))

    a = cf_eval(rule, 9, 8, check=False)
    b = cf_eval(rule, 10, 8, check=False)
    assert a == b


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)
tvar = Poly.var("t")


@st.composite
def series_with_unit_constant(draw, order=6):
    cs = [Poly.const(1)]
    for _ in range(order):
        a, b = draw(small), draw(small)
        cs.append(Poly.const(a) + b * tvar)
    return Series(cs, order)


@settings(max_examples=40, deadline=None)
@given(series_with_unit_constant())
def test_inverse_property(f):
    assert f * f.inverse() == Series.one(f.order)


@settings(max_examples=40, deadline=None)
@given(series_with_unit_constant())
def test_sqrt_property(f):
    g = f.sqrt()
    assert g * g == f
    assert g[0] == 1


@settings(max_examples=30, deadline=None)
@given(series_with_unit_constant(), series_with_unit_constant(), series_with_unit_constant())
def test_series_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
