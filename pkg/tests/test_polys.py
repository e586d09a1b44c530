from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from kashaev.polys import (IntPoly, LaurentPoly, format_terms, laurent_to_y,
                           parse_laurent, poly_gcd, pretty_t, substitute_u_to_s)

coeff_lists = st.lists(st.integers(-20, 20), max_size=6)
laurent_dicts = st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=5)

U, S = sympy.symbols("u s")


def to_sympy_u(p):
    return sum(c * U ** k for k, c in enumerate(p.coeffs))


def to_sympy_s(p):
    return sum(c * S ** e for e, c in p.terms)


def test_intpoly_basics():
    u = IntPoly.gen()
    p = u * u - 3
    assert p.coeffs == (-3, 0, 1)
    assert p.degree == 2
    assert p(Fraction(1, 2)) == Fraction(-11, 4)
    assert IntPoly().degree == -1
    assert (u ** 3).derivative() == IntPoly([0, 0, 3])
    assert IntPoly([4, 6]).content() == 2


def test_scale_down_exact():
    assert IntPoly([2, 4]).scale_down(2) == IntPoly([1, 2])
    with pytest.raises(ArithmeticError):
        IntPoly([1, 2]).scale_down(2)


@given(coeff_lists, coeff_lists)
def test_intpoly_ring_ops_match_sympy(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert sympy.expand(to_sympy_u(p * q) - to_sympy_u(p) * to_sympy_u(q)) == 0
    assert sympy.expand(to_sympy_u(p + q) - to_sympy_u(p) - to_sympy_u(q)) == 0


@given(coeff_lists, coeff_lists)
def test_intpoly_divexact_roundtrip(a, b):
    p, q = IntPoly(a), IntPoly(b)
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p


@given(laurent_dicts, laurent_dicts)
def test_laurent_ring_ops_match_sympy(a, b):
    p, q = LaurentPoly(a), LaurentPoly(b)
    assert sympy.expand(to_sympy_s(p * q) - to_sympy_s(p) * to_sympy_s(q)) == 0
    assert sympy.expand(to_sympy_s(p - q) - to_sympy_s(p) + to_sympy_s(q)) == 0


@given(laurent_dicts, laurent_dicts)
def test_laurent_divexact_roundtrip(a, b):
    p, q = LaurentPoly(a), LaurentPoly(b)
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p


@given(laurent_dicts)
def test_format_parse_roundtrip(a):
    p = LaurentPoly(a)
    assert parse_laurent(format_terms(p.terms, "s")) == p


def test_format_terms_ascending():
    p = LaurentPoly({2: -1, 0: 3, -2: -1})
    assert format_terms(p.terms, "s") == "-1*s^-2 + 3 + -1*s^2"
    assert str(LaurentPoly()) == "0"


def test_pretty_t():
    assert pretty_t(LaurentPoly({2: -1, 0: 3, -2: -1})) == "-t + 3 - t^-1"
    assert pretty_t(LaurentPoly({4: 2, -4: 2, 0: -3})) == "2*t^2 - 3 + 2*t^-2"
    assert pretty_t(LaurentPoly.const(1)) == "1"


@given(coeff_lists)
def test_u_to_s_is_palindromic_and_invertible(a):
    p = IntPoly(a)
    q = substitute_u_to_s(p)
    assert q.is_palindromic()
    assert laurent_to_y(q) == p


def test_u_to_s_matches_sympy():
    p = IntPoly([9, 0, -6, 0, 1])
    q = substitute_u_to_s(p)
    expected = sympy.expand((S + 1 / S) ** 4 - 6 * (S + 1 / S) ** 2 + 9)
    assert sympy.expand(to_sympy_s(q) - expected) == 0


def test_normalized_representative():
    # -s^4 + s^2 - 1, shifted and negated, is the trefoil
    raw = LaurentPoly({6: -1, 4: 1, 2: -1})
    assert pretty_t(raw.normalized()) == "t - 1 + t^-1"
    assert raw.normalized() == raw.shift(-4).normalized()


@given(laurent_dicts, st.integers(-4, 4), st.sampled_from([1, -1]))
def test_normalized_ignores_units(a, k, sign):
    p = LaurentPoly(a)
    if p.is_zero():
        return
    assert (p.shift(k) * sign).normalized() == p.normalized()


def test_laurent_eval_at_zero_raises():
    with pytest.raises(ZeroDivisionError):
        LaurentPoly({-1: 1})(0)


def test_poly_gcd():
    u = IntPoly.gen()
    g = poly_gcd((u - 1) * (u + 2), (u - 1) * (u - 3))
    assert g == u - 1
