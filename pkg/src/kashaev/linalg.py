"""
Exact inertia and determinants.

Rational inputs are handled as ``fractions.Fraction``; the signature routine
clears denominators (a positive rescaling does not change the inertia) and
then runs a fraction-free symmetric elimination on Python integers, which
keeps every intermediate entry equal to a bordered minor of the input.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple


class Inertia(NamedTuple):
    signature: int
    rank: int
    nullity: int


class NotSymmetricError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


def _check_square(M):
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def is_symmetric(M):
    n = _check_square(M)
    return all(M[i][j] == M[j][i] for i in range(n) for j in range(i + 1, n))


def to_integer_matrix(M):
    """Scale a rational matrix by the (positive) lcm of its denominators."""
    den = 1
    for row in M:
        for x in row:
            if not isinstance(x, int):
                den = lcm(den, Fraction(x).denominator)
    if den == 1:
        return [[int(x) for x in row] for row in M]
    return [[int(Fraction(x) * den) for x in row] for row in M]


def _swap(A, i, j):
    if i == j:
        return
    A[i], A[j] = A[j], A[i]
    for row in A:
        row[i], row[j] = row[j], row[i]


def signature_symmetric(M) -> Inertia:
    """Signature, rank and nullity of a symmetric rational matrix.

    Diagonal pivots are used while any remaining diagonal entry is nonzero;
    otherwise a 2x2 hyperbolic block ``[[0, b], [b, 0]]`` is split off, which
    adds 2 to the rank and nothing to the signature.

    >>> signature_symmetric([[2, 0], [0, -3]])
    Inertia(signature=0, rank=2, nullity=0)
    >>> signature_symmetric([[0, 1], [1, 0]])
    Inertia(signature=0, rank=2, nullity=0)
    """
    n = _check_square(M)
    if not is_symmetric(M):
        raise NotSymmetricError("signature requested for a non-symmetric matrix")
    A = to_integer_matrix(M)
    prev = 1
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i]), None)
        if piv is not None:
            _swap(A, piv, k)
            p = A[k][k]
            if (p > 0) == (prev > 0):
                pos += 1
            else:
                neg += 1
            rk = A[k]
            for i in range(k + 1, n):
                ri = A[i]
                aik = ri[k]
                if aik:
                    for j in range(i, n):
                        ri[j] = (p * ri[j] - aik * rk[j]) // prev
                else:
                    for j in range(i, n):
                        ri[j] = (p * ri[j]) // prev
                for j in range(i + 1, n):
                    A[j][i] = ri[j]
            prev = p
            k += 1
            continue
        pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j]), None)
        if pair is None:
            break
        i0, j0 = pair
        _swap(A, i0, k)
        _swap(A, j0 if j0 != k else i0, k + 1)
        b = A[k][k + 1]
        r0, r1 = A[k], A[k + 1]
        den = prev * prev
        for i in range(k + 2, n):
            ri = A[i]
            aik, aik1 = ri[k], ri[k + 1]
            for j in range(i, n):
                val = -b * b * ri[j] + b * r1[j] * aik + b * r0[j] * aik1
                ri[j] = val // den
            for j in range(i + 1, n):
                A[j][i] = ri[j]
        prev = -(b * b) // prev
        pos += 1
        neg += 1
        k += 2
    return Inertia(pos - neg, k, n - k)


def signature_hermitian_realified(X, Y) -> int:
    """Signature of the Hermitian matrix ``X + iY``.

    ``X`` must be symmetric and ``Y`` antisymmetric.  The real form
    ``[[X, -Y], [Y, X]]`` has every eigenvalue of ``X + iY`` twice.
    """
    n = _check_square(X)
    if _check_square(Y) != n:
        raise ValueError("real and imaginary parts have different sizes")
    for i in range(n):
        for j in range(n):
            if X[i][j] != X[j][i] or Y[i][j] != -Y[j][i]:
                raise NotHermitianError("X + iY is not Hermitian")
    big = [[X[i][j] for j in range(n)] + [-Y[i][j] for j in range(n)] for i in range(n)]
    big += [[Y[i][j] for j in range(n)] + [X[i][j] for j in range(n)] for i in range(n)]
    sig = signature_symmetric(big).signature
    if sig % 2:
        raise NotHermitianError(f"odd realified signature {sig}")
    return sig // 2


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    return a.divexact(b)


def bareiss_det(M, one=1):
    """Determinant over an integral domain by fraction-free elimination.

    Entries may be ``int``, ``IntPoly`` or ``LaurentPoly``; ``one`` is the
    unit of the ring (returned for the empty matrix).
    """
    n = _check_square(M)
    if n == 0:
        return one
    A = [list(row) for row in M]
    prev = one
    sign = 1
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return one * 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        p = A[k][k]
        rk = A[k]
        for i in range(k + 1, n):
            ri = A[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = _exact_div(p * ri[j] - aik * rk[j], prev)
        prev = p
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def det_poly_matrix(M, one):
    return bareiss_det(M, one)


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def delete_rows_cols(M, drop):
    """Principal submatrix obtained by removing the indices in ``drop``."""
    keep = [i for i in range(len(M)) if i not in drop]
    return [[M[i][j] for j in keep] for i in keep]
