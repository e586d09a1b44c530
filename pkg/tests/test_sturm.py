from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kashaev.polys import IntPoly
from kashaev.sturm import (root_multiplicity_in, squarefree_mults, squarefree_part,
                           sturm_count)

U = sympy.Symbol("u")


def as_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)), U)


roots = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), max_size=5)


def from_roots(rs, lead=1):
    p = IntPoly.const(lead)
    for r in rs:
        p = p * IntPoly([-r.numerator, r.denominator])
    return p


@given(roots, st.fractions(min_value=-5, max_value=5, max_denominator=3),
       st.fractions(min_value=0, max_value=5, max_denominator=3))
@settings(deadline=None)
def test_sturm_count_matches_known_roots(rs, a, width):
    if width == 0:
        return
    b = a + width
    p = from_roots(rs)
    expected = len({r for r in rs if a < r <= b})
    assert sturm_count(p, a, b) == expected


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
@settings(deadline=None, max_examples=60)
def test_sturm_count_matches_sympy(cs):
    p = IntPoly(cs)
    if p.degree < 1:
        return
    expected = sympy.Poly(list(reversed(p.coeffs)), U).count_roots(-3, 3)
    # sympy counts the closed interval, with multiplicity; compare distinct
    distinct = len({r for r in sympy.real_roots(as_sympy(p)) if -3 < r <= 3})
    assert sturm_count(p, -3, 3) == distinct
    assert expected >= distinct


def test_irrational_roots():
    p = IntPoly([-3, 0, 1])     # y^2 - 3
    assert sturm_count(p, -2, 2) == 2
    assert sturm_count(p, Fraction(17, 10), Fraction(18, 10)) == 1
    assert sturm_count(p, 0, Fraction(17, 10)) == 0


@given(roots)
@settings(deadline=None)
def test_squarefree_mults_against_root_list(rs):
    p = from_roots(rs, lead=3)
    counts = {}
    for r in rs:
        counts[r] = counts.get(r, 0) + 1
    got = {}
    for f, m in squarefree_mults(p):
        for r in counts:
            if f(r) == 0:
                got[r] = m
    assert got == counts
    assert root_multiplicity_in(p, -5, 5) == len(rs)


def test_squarefree_of_alexander_square():
    delta = IntPoly([-3, 0, 1])
    mults = squarefree_mults(delta * delta)
    assert mults == [(delta, 2)]
    assert squarefree_part(delta * delta * 4) == delta


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        sturm_count(IntPoly(), 0, 1)
    with pytest.raises(ValueError):
        squarefree_mults(IntPoly())
