"""
Seifert matrices of braid closures and the Levine-Tristram signature.

The surface is the usual one for a closed braid: one disk per strand, one
half-twisted band per letter of the word.  Two consecutive bands in the same
column bound a loop on the surface, and these loops form a basis of its
first homology.  Linking numbers of pushed-off loops follow the standard
local rules (same loop, consecutive loops in one column, interleaved loops
in adjacent columns); the global sign is fixed so that the closure of
``1 1 1`` on two strands has signature -2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import DiagramError, MalformedInputError, parse_braid_word
from .linalg import bareiss_det, signature_hermitian_realified
from .polys import LaurentPoly


class SeifertError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    matrix: tuple
    strands: int
    word: tuple
    components: int = 1
    name: str | None = field(default=None, compare=False)

    @property
    def size(self):
        return len(self.matrix)

    @property
    def genus(self):
        return self.size // 2

    def as_lists(self):
        return [list(r) for r in self.matrix]

    def to_json(self):
        return {"strands": self.strands, "word": list(self.word),
                "genus": self.genus, "matrix": [list(r) for r in self.matrix]}


def closure_components(strands, word):
    perm = list(range(strands))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, count = set(), 0
    for s in range(strands):
        if s in seen:
            continue
        count += 1
        while s not in seen:
            seen.add(s)
            s = perm[s]
    return count


def seifert_from_braid(strands, word, name=None):
    """Seifert matrix of the closure of ``word``; the closure must be a knot
    and every generator must occur."""
    word = tuple(word)
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise MalformedInputError(f"generator {g} out of range for {strands} strands")
    comps = closure_components(strands, word)
    if comps != 1:
        raise SeifertError(f"closure has {comps} components; the oracle handles knots only")
    columns = {}
    for pos, g in enumerate(word):
        columns.setdefault(abs(g), []).append((pos, 1 if g > 0 else -1))
    missing = set(range(1, strands)) - set(columns)
    if missing:
        raise SeifertError(f"generator column(s) {sorted(missing)} unused")
    # loop = (column, first band position, second band position, signs)
    loops = []
    for col in range(1, strands):
        bands = columns[col]
        for (p1, e1), (p2, e2) in zip(bands, bands[1:]):
            loops.append((col, p1, p2, e1, e2))
    n = len(loops)
    A = [[0] * n for _ in range(n)]
    for a, (col, p1, p2, e1, e2) in enumerate(loops):
        if e1 == e2:
            A[a][a] = -e1
        for b, (col2, q1, q2, f1, f2) in enumerate(loops):
            if col2 == col and q1 == p2:
                # consecutive loops sharing the band at p2
                if e2 > 0:
                    A[b][a] = 1
                else:
                    A[a][b] = -1
            elif col2 == col + 1:
                if q1 < p1 < q2 < p2:
                    A[b][a] = 1
                elif p1 < q1 < p2 < q2:
                    A[b][a] = -1
    return SeifertMatrix(tuple(tuple(r) for r in A), strands, word, comps, name)


def seifert_from_braid_text(text):
    name, strands, word = parse_braid_word(text)
    return seifert_from_braid(strands, word, name)


def alexander_from_seifert(A):
    """``det(s A - s^-1 A^T)`` with the sign fixed by ``Delta(1) = 1``."""
    M = A.as_lists() if isinstance(A, SeifertMatrix) else [list(r) for r in A]
    n = len(M)
    s, s_inv = LaurentPoly.monomial(1), LaurentPoly.monomial(-1)
    entries = [[s * M[i][j] - s_inv * M[j][i] for j in range(n)] for i in range(n)]
    det = bareiss_det(entries, LaurentPoly.const(1))
    at_one = sum(c for _, c in det.terms)
    if at_one < 0 or (at_one == 0 and det and det.terms[-1][1] < 0):
        det = -det
    return det


def unimodular_det(A):
    """``det(A - A^T)``; equals 1 for the Seifert matrix of a knot."""
    M = A.as_lists()
    n = len(M)
    return bareiss_det([[M[i][j] - M[j][i] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class CirclePoint:
    """A point ``omega`` of the unit circle given through its rational half
    angle: ``omega^(1/2) = cos_half + i sin_half``."""
    cos_half: Fraction
    sin_half: Fraction
    u: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "cos_half", Fraction(self.cos_half))
        object.__setattr__(self, "sin_half", Fraction(self.sin_half))
        if self.cos_half ** 2 + self.sin_half ** 2 != 1:
            raise ValueError("half-angle point is not on the unit circle")

    @classmethod
    def from_parameter(cls, u):
        u = Fraction(u)
        d = 1 + u * u
        return cls((1 - u * u) / d, 2 * u / d, u)

    @property
    def x(self):
        return self.cos_half

    @property
    def omega(self):
        c, s = self.cos_half, self.sin_half
        return (c * c - s * s, 2 * c * s)

    def to_json(self):
        re, im = self.omega
        return {"u": str(self.u) if self.u is not None else None,
                "x": str(self.x), "omega": [str(re), str(im)]}


def lt_signature(A, point):
    """Signature of ``(1 - w) A + (1 - conj w) A^T`` at ``w = point.omega``."""
    re, im = point.omega
    if re == 1 and im == 0:
        raise ValueError("the signature function is not defined at omega = 1")
    M = A.as_lists() if isinstance(A, SeifertMatrix) else [list(r) for r in A]
    n = len(M)
    X = [[(1 - re) * (M[i][j] + M[j][i]) for j in range(n)] for i in range(n)]
    Y = [[im * (M[j][i] - M[i][j]) for j in range(n)] for i in range(n)]
    return signature_hermitian_realified(X, Y)


MINUS_ONE = CirclePoint(0, 1, Fraction(1))


def pythagorean_points(n, avoid=()):
    """``n`` rational half-angle points with parameters ``u = k/(n+1-k)``.

    ``avoid`` holds integer polynomials in ``y = 2x``; a point where one of
    them vanishes is nudged along the parameter until none does.
    """
    if n < 1:
        raise ValueError("need at least one point")
    points = []
    used = set()
    for k in range(1, n + 1):
        u = Fraction(k, n + 1 - k)
        bump = 1
        while True:
            p = CirclePoint.from_parameter(u)
            y = 2 * p.x
            if p.x not in used and all(q(y) != 0 for q in avoid):
                break
            u = Fraction(k, n + 1 - k) * (1 + Fraction(1, 97 * bump))
            bump += 1
        used.add(p.x)
        points.append(p)
    return points


__all__ = [
    "CirclePoint", "DiagramError", "MINUS_ONE", "SeifertError", "SeifertMatrix",
    "alexander_from_seifert", "closure_components", "lt_signature",
    "pythagorean_points", "seifert_from_braid", "seifert_from_braid_text",
    "unimodular_det",
]
