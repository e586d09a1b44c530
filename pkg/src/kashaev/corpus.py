"""Bundled test diagrams with golden values.

Each golden value records where it comes from.  Alexander polynomials are
the normalized representatives (palindromic, ``Delta(1) > 0``); signatures
are ``sigma`` at ``omega = -1`` in the convention where the positive trefoil
has ``sigma = -2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import parse_diagram
from .seifert import seifert_from_braid_text


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    source: str
    alexander: str | None = None
    sigma: int | None = None
    applicable: bool | None = None
    provenance: str = ""

    @property
    def is_braid(self):
        return self.source.lstrip().startswith("B")

    def diagram(self):
        return parse_diagram(self.source)

    def oracle(self):
        return seifert_from_braid_text(self.source) if self.is_braid else None


CORPUS = (
    CorpusEntry("unknot", "", "1", 0, None,
                "no crossings; the reduced Kauffman matrix is empty"),
    CorpusEntry("kink+", "X 1 1 2 2", "1", 0, None,
                "one positive curl on the round circle"),
    CorpusEntry("kink-", "X 2 1 1 2", "1", 0, None,
                "one negative curl on the round circle"),
    CorpusEntry("trefoil", "X 1 5 2 4; X 3 1 4 6; X 5 3 6 2", "t - 1 + t^-1", -2, None,
                "positive trefoil; classical values, PD form has no braid oracle"),
    CorpusEntry("trefoil-braid", "B 2: 1 1 1", "t - 1 + t^-1", -2, True,
                "T(2,3); roots at primitive 6th roots of unity"),
    CorpusEntry("figure-eight", "B 3: 1 -2 1 -2", "-t + 3 - t^-1", 0, True,
                "amphichiral; Delta has no roots on the circle"),
    CorpusEntry("T(2,5)", "B 2: 1 1 1 1 1",
                "t^2 - t + 1 - t^-1 + t^-2", -4, True,
                "torus knot; roots at primitive 10th roots of unity"),
    CorpusEntry("T(2,7)", "B 2: 1 1 1 1 1 1 1",
                "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3", -6, True,
                "torus knot; roots at primitive 14th roots of unity"),
    CorpusEntry("5_2", "B 3: 1 1 1 2 -1 2", "2*t - 3 + 2*t^-1", -2, True,
                "twist knot; both roots of Delta on the circle"),
    CorpusEntry("6_1", "B 4: 1 1 2 -1 -3 2 -3", "-2*t + 5 - 2*t^-1", 0, True,
                "stevedore; roots of Delta are real and positive"),
    CorpusEntry("T(3,4)", "B 3: 1 2 1 2 1 2 1 2",
                "t^3 - t^2 + 1 - t^-2 + t^-3", -6, True,
                "torus knot 8_19; definite"),
    CorpusEntry("T(3,5)", "B 3: 1 2 1 2 1 2 1 2 1 2",
                "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4", -8, True,
                "torus knot 10_124; definite"),
)

_BY_NAME = {e.name: e for e in CORPUS}


def get(name):
    return _BY_NAME[name]


def lookup(name):
    return _BY_NAME.get(name)


def names():
    return [e.name for e in CORPUS]


def knots():
    """Entries whose diagram is a knot (all of them, at present)."""
    return [e for e in CORPUS if e.diagram().n_components == 1]
