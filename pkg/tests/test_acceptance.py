"""Acceptance criteria, each checked exactly.

Run with ``pytest tests/test_acceptance.py`` for one PASS/FAIL line per
criterion in the terminal summary, or ``python tests/test_acceptance.py``.
"""

import random
import time
from fractions import Fraction

import pytest

from kashaev import corpus
from kashaev.diagram import BLACK, WHITE, eta_sign, random_rewrite, t_sign, writhe
from kashaev.invariants import (alexander_kauffman, alexander_sq_identity,
                                applicability_predicate, gordon_litherland,
                                kashaev_inertia, kashaev_invariant, signature_profile)
from kashaev.matrices import factorization_check, goeritz, reduced_kashaev_det
from kashaev.seifert import (MINUS_ONE, alexander_from_seifert, lt_signature,
                             pythagorean_points)

SEED = 20240611
REWRITES_PER_KNOT = 200
X0_VALUES = (Fraction(0), Fraction(1, 3), Fraction(-1, 2), Fraction(5, 7), Fraction(1))
N_POINTS = 64
DEFINITE = ("trefoil-braid", "T(2,5)", "T(2,7)", "T(3,4)", "T(3,5)",
            "figure-eight", "5_2", "6_1")

RESULTS = {}


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def entries():
    return [(e, e.diagram()) for e in corpus.CORPUS]


@pytest.fixture(scope="module")
def variants(entries):
    """200 random R1/R2 rewrites (1 to 3 moves each) of every corpus knot."""
    out = {}
    for e, D in entries:
        rng = random.Random(f"{SEED}:{e.name}")
        out[e.name] = [random_rewrite(D, rng, moves=rng.randint(1, 3))
                       for _ in range(REWRITES_PER_KNOT)]
    return out


def test_criterion_1_factorization(entries, variants):
    t = time.perf_counter()
    bad = [e.name for e, D in entries if not factorization_check(D)]
    fuzz = [V for vs in variants.values() for V in vs]
    bad += [V.to_pd_text() for V in fuzz if not factorization_check(V)]
    record(1, not bad and len(entries) >= 10 and len(fuzz) >= 500,
           f"tau = K^T S K on {len(entries)} corpus diagrams and {len(fuzz)} rewrites, "
           f"{len(bad)} failures ({time.perf_counter() - t:.1f}s)")


def test_criterion_2_alexander_squared(entries):
    bad = []
    n_oracle = 0
    for e, D in entries:
        delta = alexander_kauffman(D)
        ok, _ = alexander_sq_identity(D, alexander=delta)
        if not ok:
            bad.append(e.name)
        A = e.oracle()
        if A is not None:
            n_oracle += 1
            seifert = alexander_from_seifert(A)
            ok2, _ = alexander_sq_identity(D, alexander=seifert)
            if not ok2:
                bad.append(e.name + " (oracle)")
    record(2, not bad, f"det(tau~) = +-Delta^2 on {len(entries)} diagrams, "
                       f"{n_oracle} also against the Seifert route; failures {bad}")


def test_criterion_3_classical_signature(entries):
    bad = []
    for e, D in entries:
        k0 = kashaev_invariant(D, 0)
        sw, sb = gordon_litherland(D, WHITE), gordon_litherland(D, BLACK)
        values = {k0, 2 * sw, 2 * sb}
        A = e.oracle()
        if A is not None:
            values.add(2 * lt_signature(A, MINUS_ONE))
        if len(values) != 1:
            bad.append(e.name)
    tref = corpus.get("trefoil").diagram()
    trefoil_ok = (kashaev_inertia(tref, 0).signature, writhe(tref),
                  gordon_litherland(tref, WHITE)) == (-1, 3, -2)
    record(3, not bad and trefoil_ok,
           f"sign(tau[0]) - w = 2 sigma via both Goeritz colours and the oracle on "
           f"{len(entries)} diagrams; trefoil -1 - 3 = 2(-2): {trefoil_ok}; failures {bad}")


def test_criterion_4_sign_rule_and_mu_sum(entries, variants):
    diagrams = [D for _, D in entries] + [V for vs in variants.values() for V in vs]
    crossings = 0
    bad = 0
    for D in diagrams:
        for x in range(D.n_crossings):
            for v in (WHITE, BLACK):
                crossings += 1
                if eta_sign(D, x, v) * t_sign(D, x, v) != D.signs[x]:
                    bad += 1
        if goeritz(D, WHITE).mu + goeritz(D, BLACK).mu != writhe(D):
            bad += 1
    record(4, bad == 0, f"eta t = sgn at {crossings} crossing-colour pairs and "
                        f"mu_w + mu_b = w on {len(diagrams)} diagrams, {bad} failures")


def test_criterion_5_value_at_one(entries):
    knots = [(e, D) for e, D in entries if D.n_components == 1]
    bad = [e.name for e, D in knots if kashaev_inertia(D, 1).signature != writhe(D)]
    record(5, not bad, f"sign(tau[1]) = w on {len(knots)} knots; failures {bad}")


def test_criterion_6_definite_scan():
    t = time.perf_counter()
    bad = []
    checked = 0
    for name in DEFINITE:
        e = corpus.get(name)
        D, A = e.diagram(), e.oracle()
        if not applicability_predicate(A):
            bad.append(name + " (not applicable)")
        w = writhe(D)
        points = pythagorean_points(N_POINTS, avoid=[reduced_kashaev_det(D)])
        for p in points:
            checked += 1
            if kashaev_inertia(D, p.x).signature - w != 2 * lt_signature(A, p):
                bad.append(f"{name} at x={p.x}")
    elapsed = time.perf_counter() - t
    record(6, not bad and elapsed < 60,
           f"sign(tau[x]) - w = 2 sigma(omega) at {checked} points over {len(DEFINITE)} "
           f"knots in {elapsed:.1f}s; failures {bad[:5]}")


def test_criterion_7_jump_bounds(entries):
    grid = sorted(p.x for p in pythagorean_points(N_POINTS))
    bad = []
    n_jumps = 0
    for e, D in entries:
        prof = signature_profile(D, grid)
        for j in prof.jumps:
            n_jumps += 1
            if not j.within_bound:
                bad.append(e.name)
    tref = signature_profile(corpus.get("trefoil").diagram(), grid)
    tref_ok = (len(tref.jumps) == 2 and
               all(abs(j.change) == 4 and j.roots == 1 and j.multiplicity == 1
                   for j in tref.jumps))
    record(7, not bad and tref_ok,
           f"{n_jumps} bracketed jumps within 2 mult(Delta) per side; trefoil "
           f"changes {[j.change for j in tref.jumps]} across simple roots; failures {bad}")


def test_criterion_8_nullity(entries):
    bad = []
    checked = 0
    for e, D in entries:
        det = reduced_kashaev_det(D)
        for p in pythagorean_points(N_POINTS):
            checked += 1
            nullity = kashaev_inertia(D, p.x).nullity
            at_root = det(2 * p.x) == 0
            if nullity < 2 or (not at_root and nullity != 2):
                bad.append(f"{e.name} at x={p.x}")
    record(8, not bad, f"nullity >= 2, and = 2 off Alexander roots, at {checked} "
                       f"sample points; failures {bad[:5]}")


def test_criterion_9_invariance(entries, variants):
    t = time.perf_counter()
    bad = []
    checked = 0
    for e, D in entries:
        if D.n_components != 1:
            continue
        base = [kashaev_invariant(D, x) for x in X0_VALUES]
        for V in variants[e.name]:
            checked += 1
            if [kashaev_invariant(V, x) for x in X0_VALUES] != base:
                bad.append(f"{e.name}: {V.to_pd_text()}")
    record(9, not bad and checked >= REWRITES_PER_KNOT * len(entries),
           f"sign(tau[x]) - w unchanged on {checked} rewrites at x0 in "
           f"{[str(x) for x in X0_VALUES]} ({time.perf_counter() - t:.1f}s); "
           f"failures {bad[:3]}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
