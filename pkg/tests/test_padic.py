from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localroots.arith import INF, InsufficientPrecision, vp
from localroots.padic import (
    FieldProfile,
    PadicScalar,
    arithmetic,
    from_rational,
    kth_root_exists_scalar,
    kth_root_scalar,
    principal_exp,
    principal_log,
    teichmuller,
    valuation,
)

from helpers import unit_kth_powers

Q5 = FieldProfile(5, 4)
PRIMES = st.sampled_from([2, 3, 5, 7, 11])


def fr(a, p=5, n=4):
    return from_rational(Fraction(a), FieldProfile(p, n))


def test_profile_rejects_composite_and_empty_precision():
    with pytest.raises(ValueError):
        FieldProfile(6, 4)
    with pytest.raises(ValueError):
        FieldProfile(5, 0)


def test_from_rational_examples():
    x = fr(50)
    assert (x.valuation, x.unit) == (2, 2)
    z = fr(0, p=7)
    assert z.valuation == INF and z.is_exact_zero
    third = fr(Fraction(1, 3))
    assert (third.valuation, third.unit) == (0, 417)
    assert 3 * 417 % 625 == 1


def test_valuation_examples():
    assert valuation(fr(50)) == 2
    assert valuation(fr(Fraction(1, 5))) == -1
    assert valuation(PadicScalar.zero(Q5)) == INF


def test_arithmetic_examples():
    p5 = fr(5)
    prod = arithmetic(p5, p5, "mul")
    assert (prod.valuation, prod.unit) == (2, 1)
    x = fr(Fraction(7, 3))
    assert arithmetic(x, -x, "add").is_zero
    q = arithmetic(fr(1), fr(3), "div")
    assert (q.valuation, q.unit) == (0, 417)
    with pytest.raises(ZeroDivisionError):
        arithmetic(fr(1), PadicScalar.zero(Q5), "div")
    with pytest.raises(ValueError):
        arithmetic(fr(1), fr(1, p=7), "add")


def test_cancellation_shrinks_window():
    x = fr(1) + fr(Fraction(1, 1)).shift(3)  # 1 + 125
    y = x - fr(1)
    assert y.valuation == 3
    assert y.absprec == x.absprec
    assert y.relprec == 1


def test_teichmuller_examples():
    assert teichmuller(fr(6)).to_fraction() % 625 == 1
    t = teichmuller(fr(2, n=3))
    assert t.unit == 57
    # brute force: the only y mod 125 with y^4 = 1 and y = 2 mod 5
    assert [y for y in range(125) if pow(y, 4, 125) == 1 and y % 5 == 2] == [57]
    minus_one = teichmuller(fr(-1, p=7))
    assert minus_one.unit == 7**4 - 1


def test_teichmuller_needs_unit():
    with pytest.raises(ValueError):
        teichmuller(fr(5))


def test_principal_log_examples():
    assert principal_log(fr(1)).is_zero
    assert principal_log(fr(6)).valuation == 1
    assert principal_log(fr(26)).valuation == 2
    with pytest.raises(ValueError):
        principal_log(fr(2))
    with pytest.raises(ValueError):
        principal_log(fr(3, p=2))


def test_kth_root_examples():
    assert kth_root_exists_scalar(fr(1), 7)
    assert not kth_root_exists_scalar(fr(2, p=7), 3)
    assert {pow(y, 3, 7) for y in range(1, 7)} == {1, 6}
    assert not kth_root_exists_scalar(fr(6), 5)
    assert 6 not in unit_kth_powers(5, 4, 5)
    r = kth_root_scalar(fr(25), 2)
    assert r.valuation == 1 and r.unit in (1, 5**4 - 1)
    assert kth_root_scalar(fr(5), 2) is None
    s = kth_root_scalar(fr(6), 2)
    assert pow(s.unit, 2, 625) == 6


def test_kth_root_rejects_bad_k_and_zero():
    with pytest.raises(ValueError):
        kth_root_exists_scalar(fr(2), 0)
    with pytest.raises(ValueError):
        kth_root_exists_scalar(PadicScalar.zero(Q5), 2)


def test_insufficient_precision_is_explicit():
    short = from_rational(6, FieldProfile(5, 1))
    with pytest.raises(InsufficientPrecision):
        kth_root_exists_scalar(short, 5)
    # a residue obstruction is still decided at one digit
    assert not kth_root_exists_scalar(from_rational(2, FieldProfile(5, 1)), 5 * 2)


def test_two_adic_roots():
    for u in range(1, 64, 2):
        x = from_rational(u, FieldProfile(2, 12))
        for k in (2, 3, 4, 6, 8):
            r = kth_root_scalar(x, k)
            expect = u % 2 ** 6 in unit_kth_powers(2, 6, k)
            assert (r is not None) == expect
            if r is not None:
                assert (r**k - x).is_zero


def test_serialization_round_trip():
    for a in (Fraction(50), Fraction(1, 3), Fraction(-7, 25), Fraction(0)):
        x = fr(a)
        assert PadicScalar.from_dict(x.to_dict()) == x
    lossy = fr(1) - fr(126)
    assert PadicScalar.from_dict(lossy.to_dict()) == lossy
    d = fr(50).to_dict()
    assert set(d) >= {"p", "precision", "valuation", "unit_digits"}
    assert d["unit_digits"] == "2"


@settings(max_examples=150, deadline=None)
@given(PRIMES, st.integers(1, 10**6), st.integers(1, 10**6))
def test_valuation_is_additive(p, a, b):
    prof = FieldProfile(p, 8)
    x, y = from_rational(a, prof), from_rational(Fraction(1, b), prof)
    assert (x * y).valuation == x.valuation + y.valuation


@settings(max_examples=150, deadline=None)
@given(PRIMES, st.integers(-(10**6), 10**6), st.integers(-(10**6), 10**6))
def test_addition_never_inflates_precision(p, a, b):
    prof = FieldProfile(p, 6)
    x, y = from_rational(a, prof), from_rational(b, prof)
    s = x + y
    assert s.absprec <= min(x.absprec, y.absprec)
    # every digit the sum claims is correct
    assert vp(s.to_fraction() - (a + b), p) >= s.absprec


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 10**6))
def test_teichmuller_properties(p, a):
    if a % p == 0:
        a += 1
    x = from_rational(a, FieldProfile(p, 6))
    w = teichmuller(x)
    assert (w ** (p - 1) - 1).is_zero
    assert (w.unit - x.unit) % p == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 500), st.integers(1, 500))
def test_log_is_a_homomorphism(p, a, b):
    prof = FieldProfile(p, 10)
    floor = 4 if p == 2 else p
    x = from_rational(1 + floor * a, prof)
    y = from_rational(1 + floor * b, prof)
    lhs = principal_log(x * y)
    rhs = principal_log(x) + principal_log(y)
    assert (lhs - rhs).is_zero


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 500))
def test_exp_inverts_log(p, a):
    x = from_rational(1 + p * a, FieldProfile(p, 10))
    assert (principal_exp(principal_log(x)) - x).is_zero


@settings(max_examples=200, deadline=None)
@given(PRIMES, st.integers(1, 10**5), st.integers(1, 12), st.integers(-3, 3))
def test_root_reproduces_value(p, a, k, shift):
    prof = FieldProfile(p, 12)
    x = from_rational(Fraction(a) * Fraction(p) ** (shift * k), prof)
    r = kth_root_scalar(x, k)
    assert (r is None) == (not kth_root_exists_scalar(x, k))
    if r is not None:
        assert (r**k - x).is_zero
