"""Real root counting for integer polynomials: Sturm chains and Yun's
squarefree decomposition, both in exact rational arithmetic."""

from __future__ import annotations

from fractions import Fraction

from .polys import IntPoly, _from_rational, poly_divmod_q


def _positive_rescale(coeffs):
    """Integer multiple of a rational coefficient list by a positive factor."""
    from math import gcd, lcm
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def sturm_chain(p):
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [list(p.coeffs), list(p.derivative().coeffs)]
    while chain[-1]:
        _, r = poly_divmod_q(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_positive_rescale([-c for c in r]))
    return [IntPoly(c) for c in chain if c]


def _variations(chain, x):
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p, a, b):
    """Number of distinct real roots of ``p`` in the half-open interval
    ``(a, b]``."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    if chain[-1].degree > 0:
        # repeated roots: the count is only right on the squarefree part,
        # in particular when an endpoint is a multiple root
        q, r = poly_divmod_q(p.coeffs, chain[-1].coeffs)
        assert not r
        chain = sturm_chain(_from_rational(q))
    return _variations(chain, a) - _variations(chain, b)


def squarefree_mults(p):
    """Yun's decomposition ``p = c * prod f_i**i`` with pairwise coprime
    squarefree ``f_i``; returns ``[(f_i, i), ...]`` for nonconstant factors,
    each ``f_i`` primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree <= 0:
        return []

    def gcd_q(x, y):
        while y:
            _, r = poly_divmod_q(x, y)
            x, y = y, r
        return x

    def div_q(x, y):
        q, r = poly_divmod_q(x, y)
        assert not r
        return q

    def deriv(x):
        return [k * c for k, c in enumerate(x) if k]

    def sub(x, y):
        n = max(len(x), len(y))
        out = [(x[i] if i < len(x) else 0) - (y[i] if i < len(y) else 0) for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return out

    f = [Fraction(c) for c in p.coeffs]
    a0 = gcd_q(f, deriv(f))
    b = div_q(f, a0)
    c = div_q(deriv(f), a0)
    d = sub(c, deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = gcd_q(b, d)
        if len(a) > 1:
            out.append((_from_rational(a), i))
        b = div_q(b, a)
        c = div_q(d, a)
        d = sub(c, deriv(b))
        i += 1
    return out


def squarefree_part(p):
    result = IntPoly.const(1)
    for f, _ in squarefree_mults(p):
        result = result * f
    return result


def root_multiplicity_in(p, a, b):
    """Sum of multiplicities of the real roots of ``p`` in ``(a, b]``."""
    return sum(m * sturm_count(f, a, b) for f, m in squarefree_mults(p))
