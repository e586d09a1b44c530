"""
Exact integer polynomials.

Two rings are used throughout the package:

* ``IntPoly``     -- dense polynomials in ``u = 2x`` (the ring in which the
                     region matrix lives).  Also used for root counting in
                     ``y = s + 1/s``, which is the same variable.
* ``LaurentPoly`` -- Laurent polynomials in ``s = t^(1/2)`` (the ring of the
                     Kauffman matrix and of the Alexander polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_divexact(num, den):
    """Exact quotient of dense integer coefficient lists, low degree first."""
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    if dd < 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if dn < dd:
        if any(num):
            raise ArithmeticError("inexact polynomial division")
        return []
    lead = den[-1]
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c, r = divmod(num[k + dd], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


class IntPoly:
    """Dense polynomial with integer coefficients in ``u``; ``coeffs[k]`` is the
    coefficient of ``u**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def gen(cls):
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = IntPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def divexact(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return IntPoly(_poly_divexact(self.coeffs, other.coeffs))

    def scale_down(self, k):
        """Divide every coefficient by the integer ``k``, which must be exact."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {k}")
            out.append(q)
        return IntPoly(out)

    def __call__(self, u0):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * u0 + c
        return acc

    def derivative(self):
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self):
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_terms(enumerate(self.coeffs), "u")


@total_ordering
class LaurentPoly:
    """Sparse integer Laurent polynomial in ``s = t^(1/2)``.

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with no
    zero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            acc = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            terms = acc
        self.terms = tuple(sorted((int(e), int(c)) for e, c in terms.items() if c))

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    @classmethod
    def s(cls):
        return cls({1: 1})

    def as_dict(self):
        return dict(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def low(self):
        return self.terms[0][0]

    @property
    def high(self):
        return self.terms[-1][0]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        return self.terms < other.terms

    def __hash__(self):
        return hash(("LaurentPoly", self.terms))

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms})
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only units can be inverted")
            (e, c), = self.terms
            return LaurentPoly({e * n: c ** n})
        result = LaurentPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by ``s**k``."""
        return LaurentPoly({e + k: c for e, c in self.terms})

    def _dense(self):
        out = [0] * (self.high - self.low + 1)
        for e, c in self.terms:
            out[e - self.low] = c
        return out

    def divexact(self, other):
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly()
        q = _poly_divexact(self._dense(), other._dense())
        base = self.low - other.low
        return LaurentPoly({base + k: c for k, c in enumerate(q)})

    def invert_variable(self):
        """The image under ``s -> 1/s``."""
        return LaurentPoly({-e: c for e, c in self.terms})

    def is_palindromic(self):
        return self == self.invert_variable()

    def __call__(self, s0):
        if s0 == 0:
            raise ZeroDivisionError("Laurent polynomial evaluated at s = 0")
        s0 = Fraction(s0)
        return sum((c * s0 ** e for e, c in self.terms), Fraction(0))

    def normalized(self):
        """Representative of the class of ``self`` modulo units ``+-s^k``.

        The exponent range is centred on zero when its parity allows it;
        the sign makes the value at ``s = 1`` positive, or, when that value
        vanishes, the top coefficient positive.
        """
        if not self.terms:
            return self
        total = self.low + self.high
        p = self.shift(-(total // 2)) if total % 2 == 0 else self.shift(-self.low)
        at_one = sum(c for _, c in p.terms)
        if at_one < 0 or (at_one == 0 and p.terms[-1][1] < 0):
            p = -p
        return p

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms)})"

    def __str__(self):
        return format_terms(self.terms, "s")

    def in_t(self):
        """Human-readable form in ``t``; requires only even powers of ``s``."""
        if any(e % 2 for e, _ in self.terms):
            return format_terms(((Fraction(e, 2), c) for e, c in self.terms), "t")
        return format_terms(((e // 2, c) for e, c in self.terms), "t")


def format_terms(terms, var):
    """Sparse text form ``coef*var^k`` in ascending exponent order, e.g.
    ``-1*s^-2 + 3 + -1*s^2``; the zero polynomial prints as ``0``."""
    parts = []
    for e, c in terms:
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append(f"{c}*{var}")
        else:
            parts.append(f"{c}*{var}^{e}")
    return " + ".join(parts) if parts else "0"


def pretty_t(p):
    """Conventional display of a Laurent polynomial in ``t``, highest power
    first: ``-t + 3 - t^-1``."""
    if p.is_zero():
        return "0"
    if any(e % 2 for e, _ in p.terms):
        var, terms = "t^(1/2)", p.terms
    else:
        var, terms = "t", [(e // 2, c) for e, c in p.terms]
    out = []
    for e, c in reversed(list(terms)):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def parse_laurent(text):
    """Inverse of ``format_terms`` for the variable ``s``."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    acc = {}
    for part in text.split(" + "):
        part = part.strip()
        if "*s" in part:
            coef, _, power = part.partition("*s")
            e = int(power[1:]) if power.startswith("^") else 1
        else:
            coef, e = part, 0
        acc[e] = acc.get(e, 0) + int(coef)
    return LaurentPoly(acc)


def substitute_u_to_s(p):
    """Image of ``p(u)`` under ``u -> s + 1/s``."""
    y = LaurentPoly({1: 1, -1: 1})
    acc = LaurentPoly()
    for c in reversed(p.coeffs):
        acc = acc * y + c
    return acc


def laurent_to_y(q):
    """Write a palindromic Laurent polynomial as a polynomial in
    ``y = s + 1/s``; the inverse of ``substitute_u_to_s``."""
    if not q.is_palindromic():
        raise ValueError(f"{q} is not palindromic in s")
    rest = q
    coeffs = {}
    y = LaurentPoly({1: 1, -1: 1})
    while rest:
        d = rest.high
        c = rest.terms[-1][1]
        coeffs[d] = c
        rest = rest - (y ** d) * c
    deg = max(coeffs) if coeffs else -1
    return IntPoly(coeffs.get(k, 0) for k in range(deg + 1))


def eval_poly(p, x0):
    """Value of ``p`` (a polynomial in ``u = 2x``) at ``x = x0``."""
    return p(2 * Fraction(x0))


def eval_laurent(q, s0):
    return q(s0)


def poly_divmod_q(a, b):
    """Division with remainder over Q for coefficient lists of Fractions."""
    a = [Fraction(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    b = [Fraction(c) for c in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, d in enumerate(b):
            a[k + i] -= c * d
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _from_rational(coeffs):
    """Primitive integer polynomial with the same roots as the rational list."""
    from math import lcm
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    return IntPoly(int(Fraction(c) * den) for c in coeffs).primitive()


def poly_gcd(a, b):
    """Primitive gcd of two integer polynomials (Euclid over Q)."""
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        _, r = poly_divmod_q(x, y)
        x, y = y, r
    if not x:
        return IntPoly()
    return _from_rational(x)
