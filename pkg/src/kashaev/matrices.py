"""
Matrices indexed by the regions of a diagram.

The Kashaev matrix is assembled slot by slot: each crossing contributes a
4x4 block on its corners, and the block is added into the rows and columns
of the regions owning those corners.  When two corners of a crossing lie in
the same region the contributions simply accumulate, which is how
non-reduced diagrams are handled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import BLACK, COLOUR_NAMES, WHITE, eta_sign, t_sign
from .linalg import bareiss_det
from .polys import IntPoly, LaurentPoly, substitute_u_to_s


class AdjacencyError(ValueError):
    """The regions given for deletion do not share an edge."""


class ConventionError(RuntimeError):
    """An identity that holds for every diagram failed; this points at an
    orientation or sign bug rather than bad input."""


_U = IntPoly.gen()
# twice the per-crossing block, in u = 2x
_DOUBLE_DIAG_IK = _U * _U - 2
_DOUBLE_ONE = IntPoly.const(2)


@dataclass(frozen=True)
class RegionMatrix:
    """Matrix with entries in a polynomial ring; ``rows``/``cols`` carry the
    crossing or region ids of each line."""
    entries: tuple
    rows: tuple
    cols: tuple

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def as_lists(self):
        return [list(r) for r in self.entries]

    def evaluate(self, x0):
        """Entries of a ``u``-matrix at ``x = x0`` as Fractions."""
        u0 = 2 * Fraction(x0)
        return [[p(u0) for p in row] for row in self.entries]

    def to_json(self):
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[str(p) for p in row] for row in self.entries],
        }


def _freeze(rows):
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=512)
def kashaev_matrix(D):
    """Symmetric region matrix with entries in Z[u], u = 2x."""
    F = D.n_regions
    acc = [[IntPoly() for _ in range(F)] for _ in range(F)]
    for x in range(D.n_crossings):
        frame = D.corner_frame(x)
        sgn = frame.sign
        reg = [c.region for c in frame.corners]
        incoherent = set(frame.ik)
        for q in range(4):
            for r in range(4):
                if q == r:
                    block = _DOUBLE_DIAG_IK if q in incoherent else _DOUBLE_ONE
                elif (q - r) % 4 == 2:
                    block = _DOUBLE_ONE
                else:
                    block = _U
                acc[reg[q]][reg[r]] = acc[reg[q]][reg[r]] + block * sgn
    entries = [[p.scale_down(2) for p in row] for row in acc]
    ids = tuple(range(F))
    return RegionMatrix(_freeze(entries), ids, ids)


@lru_cache(maxsize=512)
def kauffman_matrix(D):
    """Crossings x regions; entry = sum of the corner labels of the region."""
    F = D.n_regions
    rows = []
    for x in range(D.n_crossings):
        frame = D.corner_frame(x)
        row = [LaurentPoly() for _ in range(F)]
        for c in frame.corners:
            row[c.region] = row[c.region] + LaurentPoly.monomial(c.label)
        rows.append(row)
    return RegionMatrix(_freeze(rows), tuple(range(D.n_crossings)), tuple(range(F)))


def sign_diagonal(D):
    return tuple(D.signs)


def kauffman_product(D):
    """``K^T S K`` over Z[s, 1/s]."""
    K = kauffman_matrix(D)
    F = D.n_regions
    out = [[LaurentPoly() for _ in range(F)] for _ in range(F)]
    for x, sgn in enumerate(D.signs):
        row = K.entries[x]
        support = [i for i in range(F) if row[i]]
        for i in support:
            for j in support:
                out[i][j] = out[i][j] + row[i] * row[j] * sgn
    return out


def factorization_check(D):
    """Exact equality of ``tau_D`` (with u -> s + 1/s) and ``K^T S K``."""
    tau = kashaev_matrix(D)
    prod = kauffman_product(D)
    F = D.n_regions
    return all(substitute_u_to_s(tau.entries[i][j]) == prod[i][j]
               for i in range(F) for j in range(F))


def adjacent_pairs(D):
    """All unordered pairs of regions sharing at least one edge."""
    if not D.pd:
        return [(0, 1)]
    pairs = set()
    for e in D.slots_of:
        a, b = D.edge_sides(e)
        pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


def default_pair(D):
    """The two regions flanking edge 1."""
    a, b = D.edge_sides(1)
    return (min(a, b), max(a, b))


def _checked_pair(D, pair):
    if pair is None:
        return default_pair(D)
    a, b = pair
    key = (min(a, b), max(a, b))
    if key not in adjacent_pairs(D):
        raise AdjacencyError(f"regions {a} and {b} are not adjacent")
    return key


def delete_adjacent_pair(M, D, pair=None):
    """Remove the columns (and, for square region matrices, the rows) of two
    adjacent regions."""
    pair = _checked_pair(D, pair)
    keep = [i for i, r in enumerate(M.cols) if r not in pair]
    if M.rows == M.cols:
        entries = [[M.entries[i][j] for j in keep] for i in keep]
        ids = tuple(M.cols[i] for i in keep)
        return RegionMatrix(_freeze(entries), ids, ids)
    entries = [[row[j] for j in keep] for row in M.entries]
    return RegionMatrix(_freeze(entries), M.rows, tuple(M.cols[j] for j in keep))


@lru_cache(maxsize=512)
def reduced_kashaev_det(D, pair=None):
    """``det`` of the Kashaev matrix with an adjacent pair removed, in Z[u]."""
    red = delete_adjacent_pair(kashaev_matrix(D), D, pair)
    return bareiss_det(red.as_lists(), IntPoly.const(1))


@lru_cache(maxsize=512)
def reduced_kauffman_det(D, pair=None):
    red = delete_adjacent_pair(kauffman_matrix(D), D, pair)
    return bareiss_det(red.as_lists(), LaurentPoly.const(1))


@dataclass(frozen=True)
class GoeritzData:
    colour: int
    regions: tuple
    matrix: tuple
    eta: tuple
    t: tuple
    mu: int

    @property
    def colour_name(self):
        return COLOUR_NAMES[self.colour]

    def to_json(self):
        return {
            "colour": self.colour_name,
            "regions": list(self.regions),
            "matrix": [list(r) for r in self.matrix],
            "eta": list(self.eta),
            "t": list(self.t),
            "mu": self.mu,
        }


def goeritz(D, colour):
    regs = tuple(r for r in range(D.n_regions) if D.colours[r] == colour)
    index = {r: i for i, r in enumerate(regs)}
    n = len(regs)
    G = [[0] * n for _ in range(n)]
    eta, tv = [], []
    for x in range(D.n_crossings):
        e = eta_sign(D, x, colour)
        eta.append(e)
        tv.append(t_sign(D, x, colour))
        ends = [D.corner_region[(x, q)] for q in range(4) if D.corner_colour(x, q) == colour]
        a, b = ends
        if a != b:
            G[index[a]][index[b]] += e
            G[index[b]][index[a]] += e
    for i in range(n):
        G[i][i] = -sum(G[i][k] for k in range(n) if k != i)
    mu = sum(-e for e, t in zip(eta, tv) if t == -1)
    return GoeritzData(colour, regs, _freeze(G), tuple(eta), tuple(tv), mu)


def split_at_zero(tau, colours):
    """Blocks of ``tau`` at x = 0 on the white and on the black regions.

    Entries joining regions of different colours are multiples of x, so the
    matrix at 0 is block diagonal; a nonzero cross entry is a bug.
    """
    M = tau.evaluate(0)
    white = [i for i, r in enumerate(tau.rows) if colours[r] == WHITE]
    black = [i for i, r in enumerate(tau.rows) if colours[r] == BLACK]
    for i in white:
        for j in black:
            if M[i][j]:
                raise ConventionError(f"tau[0] couples regions {tau.rows[i]} and {tau.rows[j]}")
    tw = [[int(M[i][j]) for j in white] for i in white]
    tb = [[int(M[i][j]) for j in black] for i in black]
    return tw, tb
