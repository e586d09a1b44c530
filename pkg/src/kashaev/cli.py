"""Command line front end.

    kashaev info INPUT
    kashaev matrices INPUT [--pair A,B]
    kashaev alexander INPUT
    kashaev signature INPUT (--at P/Q | --scan N) [--json | --csv]
    kashaev verify (--corpus | INPUT) [--fuzz K] [--seed S]

INPUT is a corpus name, a file, or inline PD / braid text.  Exit status is
0 when every check passes, 1 when an identity fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction

from . import corpus
from .diagram import (BLACK, WHITE, DiagramError, is_special, parse_diagram,
                      random_rewrite, writhe)
from .invariants import (DEFAULT_SCAN, ColourDisagreementError, alexander_kauffman,
                         alexander_sq_identity, classical_signature_gl,
                         conjecture_report, kashaev_inertia, kashaev_invariant,
                         sign_rule_holds, mu_sum_holds)
from .matrices import (AdjacencyError, factorization_check, goeritz, kashaev_matrix,
                       kauffman_matrix, reduced_kashaev_det)
from .polys import pretty_t
from .seifert import (SeifertError, lt_signature, pythagorean_points,
                      seifert_from_braid_text)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# rational points used for the invariance fuzz
FUZZ_POINTS = (Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(4, 5), Fraction(1))


class InputError(ValueError):
    pass


def dumps(obj):
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def load_input(text):
    """Return ``(diagram, oracle_or_None, source)``."""
    entry = corpus.lookup(text)
    if entry is not None:
        source = entry.source
        name = entry.name
    elif os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            source = fh.read()
        name = None
    else:
        source = text
        name = None
    try:
        D = parse_diagram(source)
    except DiagramError as exc:
        raise InputError(str(exc)) from exc
    if name is not None and D.name is None:
        D = type(D)(D.pd, D.over_out, name)
    oracle = None
    if source.lstrip().startswith("B") or _body_is_braid(source):
        try:
            oracle = seifert_from_braid_text(source)
        except SeifertError:
            oracle = None
    return D, oracle, source


def _body_is_braid(source):
    for line in source.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line or line.lower().startswith("name:"):
            continue
        return line.startswith("B")
    return False


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def parse_pair(text):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError as exc:
        raise InputError(f"--pair wants two region ids like 0,1, got {text!r}") from exc
    return a, b


# -- commands ------------------------------------------------------------------

def cmd_info(args, out):
    D, oracle, _ = load_input(args.input)
    try:
        sigma = classical_signature_gl(D)
    except ColourDisagreementError:
        sigma = None
    info = {
        "name": D.name,
        "pd": D.to_pd_text(),
        "crossings": D.n_crossings,
        "components": D.n_components,
        "regions": D.n_regions,
        "writhe": writhe(D),
        "signs": list(D.signs),
        "colours": ["white" if c == WHITE else "black" for c in D.colours],
        "special": is_special(D),
        "alexander": pretty_t(alexander_kauffman(D)),
        "sigma": sigma,
        "seifert": oracle.to_json() if oracle is not None else None,
    }
    out.write(dumps(info) + "\n")
    return EXIT_OK


def cmd_matrices(args, out):
    D, _, _ = load_input(args.input)
    pair = parse_pair(args.pair) if args.pair else None
    try:
        det = reduced_kashaev_det(D, pair)
    except AdjacencyError as exc:
        raise InputError(str(exc)) from exc
    data = {
        "regions": [{"id": r.id, "colour": "white" if r.colour == WHITE else "black",
                     "corners": [list(c) for c in r.corners]} for r in D.regions()],
        "kashaev": kashaev_matrix(D).to_json(),
        "kauffman": kauffman_matrix(D).to_json(),
        "signs": list(D.signs),
        "goeritz": {"white": goeritz(D, WHITE).to_json(),
                    "black": goeritz(D, BLACK).to_json()},
        "reduced_kashaev_det": str(det),
        "factorization": factorization_check(D),
    }
    out.write(dumps(data) + "\n")
    return EXIT_OK


def cmd_alexander(args, out):
    D, _, _ = load_input(args.input)
    out.write(pretty_t(alexander_kauffman(D)) + "\n")
    return EXIT_OK


def _point_row(D, oracle, p, w):
    inertia = kashaev_inertia(D, p.x)
    kash = inertia.signature - w
    two_sigma = 2 * lt_signature(oracle, p) if oracle is not None else None
    return {"u": str(p.u) if p.u is not None else None, "x": str(p.x),
            "omega": [str(c) for c in p.omega], "kashaev": kash,
            "nullity": inertia.nullity, "oracle": two_sigma,
            "equal": None if two_sigma is None else kash == two_sigma}


def cmd_signature(args, out):
    D, oracle, _ = load_input(args.input)
    w = writhe(D)
    if args.at is not None:
        x0 = parse_rational(args.at)
        if not -1 <= x0 <= 1:
            raise InputError("--at must lie in [-1, 1]")
        inertia = kashaev_inertia(D, x0)
        data = {"name": D.name, "x": str(x0), "writhe": w,
                "signature": inertia.signature, "rank": inertia.rank,
                "nullity": inertia.nullity,
                "kashaev_invariant": inertia.signature - w}
        if args.csv:
            raise InputError("--csv applies to --scan only")
        out.write(dumps(data) + "\n")
        return EXIT_OK
    if args.scan < 1:
        raise InputError("--scan needs a positive count")
    det = reduced_kashaev_det(D)
    points = pythagorean_points(args.scan, avoid=() if det.is_zero() else [det])
    rows = [_point_row(D, oracle, p, w) for p in points]
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "x", "kashaev_inv", "oracle_2sigma", "equal"])
        for r in rows:
            writer.writerow([r["u"], r["x"], r["kashaev"],
                             "" if r["oracle"] is None else r["oracle"],
                             "" if r["equal"] is None else str(r["equal"]).lower()])
        out.write(buf.getvalue())
    else:
        out.write(dumps({"name": D.name, "writhe": w, "scan": rows}) + "\n")
    return EXIT_OK


def fuzz_checks(D, base_alexander, base_values, rng, count):
    """Random R1/R2 variants of ``D``; returns ``(n_checked, failures)``."""
    failures = []
    for i in range(count):
        V = random_rewrite(D, rng, moves=rng.randint(1, 3))
        checks = {
            "factorization": factorization_check(V),
            "sign_rule": sign_rule_holds(V),
            "mu_sum": mu_sum_holds(V),
            "alexander_sq": alexander_sq_identity(V, alexander=base_alexander)[0],
            "invariance": [kashaev_invariant(V, x) for x in FUZZ_POINTS] == base_values,
        }
        bad = sorted(k for k, v in checks.items() if not v)
        if bad:
            failures.append({"variant": i, "pd": V.to_pd_text(), "failed": bad})
    return count, failures


def verify_one(D, oracle, fuzz, seed, n_points=DEFAULT_SCAN, expected=None):
    report = conjecture_report(D, oracle, n_points=n_points)
    failed = report.failures()
    if expected is not None:
        if expected.alexander is not None and pretty_t(report.alexander) != expected.alexander:
            failed.append("golden_alexander")
        if expected.sigma is not None and report.sigma_gl != expected.sigma:
            failed.append("golden_sigma")
        if expected.applicable is not None and report.applicability != expected.applicable:
            failed.append("golden_applicability")
    entry = {
        "name": D.name,
        "crossings": report.crossings,
        "identities": report.to_json()["identities"],
        "verdict": report.verdict,
        "scan_points": len(report.scan),
        "scan_equal": report.scan_equal,
        "jumps": len(report.jumps),
    }
    if fuzz:
        rng = random.Random(f"{seed}:{D.name}:{D.to_pd_text()}")
        base_values = [kashaev_invariant(D, x) for x in FUZZ_POINTS]
        n, fuzz_fail = fuzz_checks(D, report.alexander, base_values, rng, fuzz)
        entry["fuzz"] = {"variants": n, "failures": fuzz_fail}
        if fuzz_fail:
            failed.append("fuzz")
    entry["failed"] = failed
    entry["ok"] = not failed
    return entry


def cmd_verify(args, out):
    if args.corpus == (args.input is not None):
        raise InputError("give either --corpus or an input")
    entries = []
    if args.corpus:
        for e in corpus.CORPUS:
            D = e.diagram()
            if D.name is None:
                D = type(D)(D.pd, D.over_out, e.name)
            entries.append(verify_one(D, e.oracle(), args.fuzz, args.seed, expected=e))
    else:
        D, oracle, _ = load_input(args.input)
        entries.append(verify_one(D, oracle, args.fuzz, args.seed,
                                  expected=corpus.lookup(args.input)))
    ok = all(e["ok"] for e in entries)
    out.write(dumps({"ok": ok, "seed": args.seed, "fuzz": args.fuzz,
                     "entries": entries}) + "\n")
    if not ok:
        for e in entries:
            if not e["ok"]:
                print(f"FAILED {e['name']}: {', '.join(e['failed'])}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    ap = argparse.ArgumentParser(prog="kashaev",
                                 description="Kashaev signatures of link diagrams")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="basic data of a diagram")
    p.add_argument("input")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("matrices", help="region matrices as JSON")
    p.add_argument("input")
    p.add_argument("--pair", help="adjacent regions to delete, e.g. 0,1")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("alexander", help="normalized Alexander polynomial")
    p.add_argument("input")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("signature", help="Kashaev signature at a point or on a scan")
    p.add_argument("input")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--at", help="rational x in [-1, 1], e.g. 1/2")
    where.add_argument("--scan", type=int, help="number of circle points")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV rows for a scan")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("verify", help="run every identity check")
    p.add_argument("input", nargs="?")
    p.add_argument("--corpus", action="store_true", help="check the bundled corpus")
    p.add_argument("--fuzz", type=int, default=0, help="random R1/R2 variants per diagram")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, DiagramError, SeifertError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
