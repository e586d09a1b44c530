"""
Invariant pipelines built on the region matrices.

Alexander polynomial from the Kauffman and Kashaev matrices, the classical
signature through Goeritz forms, the Kashaev signature as a step function of
x, and the per-diagram report comparing all of these with a Seifert oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .diagram import BLACK, WHITE, eta_sign, t_sign, writhe
from .linalg import signature_symmetric
from .matrices import (ConventionError, factorization_check, goeritz,
                       kashaev_matrix, reduced_kashaev_det, reduced_kauffman_det,
                       split_at_zero)
from .polys import IntPoly, LaurentPoly, laurent_to_y, substitute_u_to_s
from .seifert import (MINUS_ONE, alexander_from_seifert, lt_signature,
                      pythagorean_points)
from .sturm import squarefree_mults, sturm_count

DEFAULT_SCAN = 64
DEFAULT_DEPTH = 20


class ColourDisagreementError(ConventionError):
    pass


# -- Alexander polynomial ------------------------------------------------------

def alexander_kauffman(D):
    """``det`` of the Kauffman matrix with two adjacent columns removed,
    normalized up to units ``+-s^k``."""
    return reduced_kauffman_det(D).normalized()


def alexander_squared_kashaev(D, pair=None):
    """``det`` of the reduced Kashaev matrix after ``u -> s + 1/s``, with the
    sign the determinant actually has."""
    return substitute_u_to_s(reduced_kashaev_det(D, pair))


def alexander_sq_identity(D, pair=None, alexander=None):
    """Return ``(ok, sign)`` for ``det(tau~) == sign * Delta^2``."""
    if alexander is None:
        alexander = alexander_kauffman(D)
    sq = alexander * alexander
    det = alexander_squared_kashaev(D, pair)
    if det == sq:
        return True, 1
    if det == -sq:
        return True, -1
    return False, 0


def alexander_y(D):
    """The Alexander polynomial of a knot written in ``y = s + 1/s``."""
    return laurent_to_y(alexander_kauffman(D))


# -- classical signature -------------------------------------------------------

def gordon_litherland(D, colour):
    G = goeritz(D, colour)
    return signature_symmetric(G.matrix).signature - G.mu


def classical_signature_gl(D):
    """Classical signature from the Goeritz form of each colour; the two
    values must agree."""
    sw, sb = gordon_litherland(D, WHITE), gordon_litherland(D, BLACK)
    if sw != sb:
        raise ColourDisagreementError(f"white colour gives {sw}, black gives {sb}")
    return sw


def sign_rule_holds(D):
    """``eta_v(c) * t_v(c) == sgn(c)`` at every crossing, both colours."""
    return all(eta_sign(D, x, v) * t_sign(D, x, v) == D.signs[x]
               for x in range(D.n_crossings) for v in (WHITE, BLACK))


def mu_sum_holds(D):
    return goeritz(D, WHITE).mu + goeritz(D, BLACK).mu == writhe(D)


# -- Kashaev signature ---------------------------------------------------------

def kashaev_inertia(D, x0):
    return signature_symmetric(kashaev_matrix(D).evaluate(x0))


def kashaev_invariant(D, x0):
    """Signature of the Kashaev matrix at ``x0`` minus the writhe."""
    return kashaev_inertia(D, x0).signature - writhe(D)


@dataclass
class JumpBracket:
    lo: Fraction
    hi: Fraction
    value_lo: int
    value_hi: int
    roots: int = 0
    multiplicity: int = 0

    @property
    def change(self):
        return self.value_hi - self.value_lo

    @property
    def bound(self):
        # each one-sided jump is at most 2 mult(Delta); a bracket around a
        # root sees both of them
        return 4 * self.multiplicity

    @property
    def within_bound(self):
        return abs(self.change) <= self.bound

    def to_json(self):
        return {"lo": str(self.lo), "hi": str(self.hi),
                "value_lo": self.value_lo, "value_hi": self.value_hi,
                "change": self.change, "roots": self.roots,
                "multiplicity": self.multiplicity, "bound": self.bound}


@dataclass
class SignatureProfile:
    grid: list
    values: list
    jumps: list = field(default_factory=list)
    value_at_one: int | None = None
    root_poly: IntPoly | None = None

    def to_json(self):
        return {"grid": [str(x) for x in self.grid], "values": self.values,
                "jumps": [j.to_json() for j in self.jumps],
                "value_at_one": self.value_at_one}


@lru_cache(maxsize=256)
def _root_poly(D):
    """``det`` of the reduced Kashaev matrix in ``u``: ``+-Delta(y)^2`` with
    ``y = u``; ``None`` when it vanishes identically."""
    det = reduced_kashaev_det(D)
    return None if det.is_zero() else det


def signature_profile(D, grid, max_depth=DEFAULT_DEPTH):
    """Exact values of ``sign(tau_D[x])`` on ``grid`` with every change of
    value bracketed; brackets are bisected until they hold at most one root
    of ``Delta`` (counted in ``u = 2x`` by Sturm sequences)."""
    tau = kashaev_matrix(D)
    grid = [Fraction(x) for x in grid]
    if grid != sorted(grid):
        raise ValueError("grid must be sorted")

    def value(x):
        return signature_symmetric(tau.evaluate(x)).signature

    values = [value(x) for x in grid]
    det = _root_poly(D)
    factors = squarefree_mults(det) if det is not None else []

    def distinct(lo, hi):
        return sum(sturm_count(f, 2 * lo, 2 * hi) for f, _ in factors)

    def mult(lo, hi):
        # det is +-Delta^2, so halve to get multiplicities in Delta
        return sum(m * sturm_count(f, 2 * lo, 2 * hi) for f, m in factors) // 2

    jumps = []

    def refine(lo, vlo, hi, vhi, depth):
        if det is None or depth >= max_depth or distinct(lo, hi) <= 1:
            jumps.append(JumpBracket(lo, hi, vlo, vhi, distinct(lo, hi) if det else 0,
                                     mult(lo, hi) if det else 0))
            return
        mid = (lo + hi) / 2
        step = 3
        while det(2 * mid) == 0:
            mid = lo + (hi - lo) / step
            step += 1
        vmid = value(mid)
        if vmid != vlo:
            refine(lo, vlo, mid, vmid, depth + 1)
        if vmid != vhi:
            refine(mid, vmid, hi, vhi, depth + 1)

    for (a, va), (b, vb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if va != vb:
            refine(a, va, b, vb, 0)
    return SignatureProfile(grid, values, jumps, value(Fraction(1)), det)


def jump_bound_check(D, profile=None, grid=None):
    """Every bracketed change of the Kashaev signature is at most ``4 *``
    the multiplicity of the roots of ``Delta`` inside the bracket.  Returns ``None`` when
    ``Delta`` vanishes (outside the hypothesis of the bound)."""
    if _root_poly(D) is None:
        return None
    if profile is None:
        if grid is None:
            grid = sorted(p.x for p in pythagorean_points(DEFAULT_SCAN, avoid=[_root_poly(D)]))
        profile = signature_profile(D, grid)
    return all(j.within_bound for j in profile.jumps)


def roots_on_circle(alex_y):
    """Roots of a knot's Alexander polynomial on the unit circle, counted
    with multiplicity, via its ``y``-form on ``(-2, 2)``."""
    # sturm_count works on (a, b]; drop a root at y = 2 itself
    return sum(m * (sturm_count(f, -2, 2) - (f(2) == 0))
               for f, m in squarefree_mults(alex_y))


def applicability_predicate(A):
    """``|sigma(K)|`` equals the number of roots of ``Delta_K`` on the circle."""
    delta = alexander_from_seifert(A)
    sigma = lt_signature(A, MINUS_ONE)
    return abs(sigma) == roots_on_circle(laurent_to_y(delta))


# -- report --------------------------------------------------------------------

def _json_alex(p):
    return str(p)


@dataclass
class ConjectureReport:
    name: str | None
    crossings: int
    components: int
    writhe: int
    factorization: bool
    alexander: LaurentPoly
    alexander_sq_ok: bool
    alexander_sq_sign: int
    oracle_alexander_ok: bool | None
    sigma_gl: int | None
    sigma_oracle: int | None
    kashaev_at_zero: int
    classical_ok: bool
    sign_rule_ok: bool
    mu_sum_ok: bool
    at_one: bool | None
    nullity_ok: bool
    scan: list
    applicability: bool | None
    verdict: str
    jumps: list
    jump_bound_ok: bool | None

    @property
    def scan_equal(self):
        if not self.scan or any(row["equal"] is None for row in self.scan):
            return None
        return all(row["equal"] for row in self.scan)

    @property
    def ok(self):
        """All theorem-backed identities hold (exploratory scans excluded)."""
        checks = [self.factorization, self.alexander_sq_ok, self.classical_ok,
                  self.sign_rule_ok, self.mu_sum_ok, self.nullity_ok]
        if self.oracle_alexander_ok is not None:
            checks.append(self.oracle_alexander_ok)
        if self.at_one is not None:
            checks.append(self.at_one)
        if self.jump_bound_ok is not None:
            checks.append(self.jump_bound_ok)
        if self.verdict == "theorem-backed":
            checks.append(bool(self.scan_equal))
        return all(checks)

    def failures(self):
        out = []
        named = [("factorization", self.factorization),
                 ("alexander_sq", self.alexander_sq_ok),
                 ("classical", self.classical_ok),
                 ("sign_rule", self.sign_rule_ok),
                 ("mu_sum", self.mu_sum_ok),
                 ("nullity", self.nullity_ok)]
        if self.oracle_alexander_ok is not None:
            named.append(("oracle_alexander", self.oracle_alexander_ok))
        if self.at_one is not None:
            named.append(("at_one", self.at_one))
        if self.jump_bound_ok is not None:
            named.append(("jump_bound", self.jump_bound_ok))
        if self.verdict == "theorem-backed":
            named.append(("scan", bool(self.scan_equal)))
        return [k for k, v in named if not v]

    def to_json(self):
        return {
            "diagram": {"name": self.name, "crossings": self.crossings,
                        "components": self.components, "writhe": self.writhe},
            "identities": {
                "factorization": self.factorization,
                "alexander_sq": {"ok": self.alexander_sq_ok, "sign": self.alexander_sq_sign,
                                 "alexander": _json_alex(self.alexander),
                                 "oracle_agrees": self.oracle_alexander_ok},
                "classical": {"ok": self.classical_ok, "sigma_gl": self.sigma_gl,
                              "sigma_oracle": self.sigma_oracle,
                              "kashaev_at_zero": self.kashaev_at_zero},
                "sign_rule": self.sign_rule_ok,
                "mu_sum": self.mu_sum_ok,
                "at_one": self.at_one,
                "nullity": self.nullity_ok,
                "jump_bound": self.jump_bound_ok,
            },
            "jumps": [j.to_json() for j in self.jumps],
            "scan": self.scan,
            "applicability": self.applicability,
            "verdict": self.verdict,
            "ok": self.ok,
        }


def scan_rows(D, points, oracle=None):
    """One row per circle point: Kashaev invariant, ``2 sigma`` from the
    oracle, and the nullity of the Kashaev matrix."""
    w = writhe(D)
    det = _root_poly(D)
    rows = []
    for p in points:
        inertia = kashaev_inertia(D, p.x)
        kash = inertia.signature - w
        row = {"u": str(p.u), "x": str(p.x), "omega": [str(c) for c in p.omega],
               "kashaev": kash, "nullity": inertia.nullity,
               "alexander_root": det is not None and det(2 * p.x) == 0}
        if oracle is not None:
            two_sigma = 2 * lt_signature(oracle, p)
            row["oracle"] = two_sigma
            row["equal"] = kash == two_sigma
        else:
            row["oracle"] = None
            row["equal"] = None
        rows.append(row)
    return rows


def conjecture_report(D, oracle=None, n_points=DEFAULT_SCAN, points=None):
    """Run every identity on ``D``; with a Seifert ``oracle`` also compare the
    Kashaev invariant with ``2 sigma_L(omega)`` along the scan."""
    w = writhe(D)
    fact = factorization_check(D)
    alex = alexander_kauffman(D)
    sq_ok, sq_sign = alexander_sq_identity(D, alexander=alex)
    oracle_alex_ok = None
    sigma_oracle = None
    if oracle is not None:
        oracle_alex = alexander_from_seifert(oracle)
        oracle_alex_ok = oracle_alex == alex or oracle_alex == -alex
        sigma_oracle = lt_signature(oracle, MINUS_ONE)
    try:
        sigma_gl = classical_signature_gl(D)
    except ColourDisagreementError:
        sigma_gl = None
    inertia0 = kashaev_inertia(D, 0)
    k0 = inertia0.signature - w
    tw, tb = split_at_zero(kashaev_matrix(D), D.colours)
    split_ok = (signature_symmetric(tw).signature + signature_symmetric(tb).signature
                == inertia0.signature)
    classical_ok = (sigma_gl is not None and k0 == 2 * sigma_gl and split_ok
                    and (sigma_oracle is None or sigma_oracle == sigma_gl))
    at_one = kashaev_invariant(D, 1) == 0 if D.n_components == 1 else None

    det = _root_poly(D)
    if points is None:
        points = pythagorean_points(n_points, avoid=[det] if det is not None else ())
    rows = scan_rows(D, points, oracle)
    nullity_ok = all(r["nullity"] >= 2 and (r["alexander_root"] or r["nullity"] == 2)
                     for r in rows)

    grid = sorted(p.x for p in points)
    profile = signature_profile(D, grid)
    jump_ok = None if det is None else all(j.within_bound for j in profile.jumps)

    applicability = None
    if oracle is not None:
        applicability = applicability_predicate(oracle)
        verdict = "theorem-backed" if applicability else "exploratory"
    else:
        verdict = "no-oracle"
    return ConjectureReport(
        name=D.name, crossings=D.n_crossings, components=D.n_components, writhe=w,
        factorization=fact, alexander=alex, alexander_sq_ok=sq_ok,
        alexander_sq_sign=sq_sign, oracle_alexander_ok=oracle_alex_ok,
        sigma_gl=sigma_gl, sigma_oracle=sigma_oracle, kashaev_at_zero=k0,
        classical_ok=classical_ok, sign_rule_ok=sign_rule_holds(D),
        mu_sum_ok=mu_sum_holds(D), at_one=at_one, nullity_ok=nullity_ok,
        scan=rows, applicability=applicability, verdict=verdict,
        jumps=profile.jumps, jump_bound_ok=jump_ok)
