from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieforge.scalars import (
    EPS,
    EpsPoly,
    TruncationError,
    parse_poly,
    poly_mul,
    poly_specialize,
    rat_canonical,
)

from conftest import eps_polys, small_rationals


@pytest.mark.parametrize("num, den, expected", [
    (2, 4, Fraction(1, 2)),
    (3, -6, Fraction(-1, 2)),
    (0, 7, Fraction(0)),
])
def test_rat_canonical(num, den, expected):
    r = rat_canonical(num, den)
    assert r == expected
    assert r.denominator > 0
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)


def test_rat_canonical_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        rat_canonical(1, 0)


def test_poly_mul_examples():
    assert poly_mul(1 + EPS, 1 - EPS) == EpsPoly([1, 0, -1])
    e1 = EpsPoly.eps(trunc=1)
    assert poly_mul(e1, e1) == EpsPoly([], 1)
    assert poly_mul(e1, e1).is_zero()
    assert poly_mul(EPS * Fraction(1, 2), EpsPoly.const(2)) == EPS


def test_poly_mul_truncation_compatibility():
    t1, t2 = EpsPoly.eps(trunc=1), EpsPoly.eps(trunc=2)
    with pytest.raises(TruncationError):
        poly_mul(t1, t2)
    # an untruncated factor is coerced into the truncated ring
    prod = poly_mul(EpsPoly([1, 1, 1]), t1)
    assert prod == EpsPoly([0, 1], 1) and prod.trunc == 1


@pytest.mark.parametrize("p, v, expected", [
    (EpsPoly([Fraction(1, 2), Fraction(1, 2)]), 0, Fraction(1, 2)),
    (EPS, 1, 1),
    (EpsPoly([Fraction(1, 2), Fraction(-1, 2)]), 1, 0),
])
def test_poly_specialize(p, v, expected):
    assert poly_specialize(p, v) == expected


def test_specialize_truncated_refused():
    with pytest.raises(TruncationError, match="cannot specialize a truncated polynomial"):
        poly_specialize(EpsPoly([1, 1], 3), 0)


@pytest.mark.parametrize("p, text", [
    (EpsPoly.const(Fraction(1, 2)), "1/2"),
    (EpsPoly.const(-1), "-1"),
    (EpsPoly([Fraction(1, 2), Fraction(1, 2)]), "1/2+1/2*eps"),
    (EpsPoly([0, 0, 1]), "eps^2"),
    (EpsPoly([0, -3, Fraction(2, 3)]), "-3*eps+2/3*eps^2"),
    (EpsPoly(), "0"),
])
def test_text_form(p, text):
    assert str(p) == text
    assert parse_poly(text) == p


def test_canonical_form_strips_and_truncates():
    assert EpsPoly([1, 0, 0]).coeffs == (1,)
    assert EpsPoly([1, 2, 3], trunc=1).coeffs == (1, 2)
    assert EpsPoly([0, 0, 5], trunc=1).is_zero()


@given(eps_polys(), eps_polys(), eps_polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p + (-p) == EpsPoly()


@given(st.integers(0, 3), st.data())
def test_ring_axioms_truncated(k, data):
    p, q, r = (data.draw(eps_polys(trunc=k)) for _ in range(3))
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert all(c for c in (p * q).coeffs[-1:])
    assert (p * q).degree <= k


@given(eps_polys(), eps_polys(), small_rationals)
def test_specialize_is_multiplicative(p, q, v):
    assert poly_specialize(p * q, v) == poly_specialize(p, v) * poly_specialize(q, v)
    assert poly_specialize(p + q, v) == poly_specialize(p, v) + poly_specialize(q, v)


@given(eps_polys())
def test_text_round_trip(p):
    assert parse_poly(str(p)) == p
