from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from permstat import series as sr
from permstat.families import FamilySpec, weighted_sum
from permstat.poly import LAMBDA, XV, YV, MultiPoly, const, parse_poly
from permstat.series import EGF, OGF, JFractionSpec, PowerSeries, jf_moments

ints = st.lists(st.integers(-6, 6), min_size=1, max_size=7)


def ints_of(s):
    return [c.constant_term() for c in s.coeffs]


@settings(max_examples=50, deadline=None)
@given(ints, ints)
def test_product_is_commutative_and_truncates(a, b):
    p, q = PowerSeries(a), PowerSeries(b)
    assert p * q == q * p
    assert (p * q).order == min(p.order, q.order)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=0, max_size=6))
def test_invert_and_log_exp(tail):
    f = PowerSeries([1] + tail)
    assert f * f.invert() == sr.one(f.order)
    assert f.log().exp() == f


@settings(max_examples=30, deadline=None)
@given(ints)
def test_flavor_roundtrip(a):
    p = PowerSeries(a)
    assert p.to_egf().to_ogf() == p


def test_egf_product_is_binomial_convolution():
    e = sr.one(5, EGF) - sr.monomial_series(5, 1, 1, EGF)
    ex = sr.exp_neg(5).to_egf()
    prod = (ex * e)
    assert prod.flavor == EGF
    assert prod == (sr.exp_neg(5) * (sr.one(5) - sr.monomial_series(5))).to_egf()


def test_named_series():
    assert ints_of(sr.dn1_egf(3)) == [1, 1, 3, 11]
    assert ints_of(sr.dsub2_ogf(4)) == [1, 5, 11, 19, 29]
    assert ints_of(sr.derangement_egf(8)) == [1, 0, 1, 2, 9, 44, 265, 1854, 14833]
    assert sr.one(3).derivative().coeffs[:3] == [MultiPoly()] * 3


def test_derivative_integral():
    f = PowerSeries([3, 1, 4, 1, 5])
    assert f.integral().derivative().coeffs[:4] == f.coeffs[:4]


def test_exp_and_log_guards():
    with pytest.raises(ValueError):
        PowerSeries([1, 1]).exp()
    with pytest.raises(ValueError):
        PowerSeries([2, 1]).log()
    with pytest.raises(ZeroDivisionError):
        PowerSeries([0, 1]).invert()


def test_symbolic_power():
    a = parse_poly("a")
    f = (sr.one(3) + sr.monomial_series(3)).power(a)
    # (1 + t)^a = 1 + a t + a(a-1)/2 t^2 + ...
    assert f.coeffs[1] == a
    assert f.coeffs[2] == a * (a - 1) / 2


def test_trivial_jfraction():
    spec = JFractionSpec(lambda h: 0, lambda h: 0)
    assert [m.constant_term() for m in jf_moments(spec, 5)] == [1, 0, 0, 0, 0, 0]


def test_full_preset_moments():
    lam, x, y = (MultiPoly.from_var(v) for v in (LAMBDA, XV, YV))
    mu = jf_moments(sr.full_spec(), 3)
    assert mu[:2] == [const(1), MultiPoly()]
    assert mu[2] == lam * x * y
    assert mu[3] == lam * x * y * (x + y)


def test_dnx_and_dn1_presets():
    assert jf_moments(sr.dnx_spec(), 4)[4] == parse_poly("x^3 + 5*x^2 + 3*x")
    assert [m.constant_term() for m in jf_moments(sr.dn1_spec(), 3)] == [1, 1, 3, 11]


@pytest.mark.parametrize("order", [0, 1, 2, 6])
def test_jfraction_matches_enumeration(order):
    assert sr.verify_jfraction_theorem(order)


def test_lambda_minus_one():
    assert sr.verify_lambda_minus1(6)
    s = sr.lambda_minus1_series(4)
    x, y = MultiPoly.from_var(XV), MultiPoly.from_var(YV)
    assert s.coefficient(4) == -sum((x ** j * y ** (4 - j) for j in range(1, 4)), MultiPoly())
    assert weighted_sum(FamilySpec("Dn", 2), "lambda_rlm_exc").substitute(
        {LAMBDA: const(-1)}) == -x * y


def test_rational_coefficients_survive():
    s = sr.exp_neg(4)
    assert s.coefficient(4).constant_term() == Fraction(1, 24)
