"""
Oriented link diagrams as planar combinatorial maps.

A crossing is a 4-tuple of edge labels ``(a, b, c, d)`` listed
counterclockwise, starting at the incoming under-strand, so the under-strand
runs ``a -> c`` and the over-strand joins ``b`` and ``d``.  The slots of a
crossing are numbered 0..3 in that order and corner ``q`` is the wedge
between slots ``q`` and ``q + 1``.

Sign convention: a crossing is positive when the over-strand runs ``d -> b``
(the usual PD-table convention), i.e. when the cross product
``over x under`` is positive in the oriented plane.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

WHITE, BLACK = 0, 1
COLOUR_NAMES = {WHITE: "white", BLACK: "black"}

# Kauffman corner labels as exponents of s = t^(1/2), indexed by corner.
_LABELS = {+1: (0, 1, 0, -1), -1: (1, 0, -1, 0)}


class DiagramError(ValueError):
    """Base class for invalid diagram input."""


class MalformedInputError(DiagramError):
    pass


class EdgeLabelError(DiagramError):
    pass


class DisconnectedDiagramError(DiagramError):
    pass


class NonPlanarError(DiagramError):
    pass


class MoveError(DiagramError):
    pass


@dataclass(frozen=True)
class Crossing:
    index: int
    slots: tuple
    over_out: int
    sign: int


@dataclass(frozen=True)
class Region:
    id: int
    corners: tuple
    colour: int

    @property
    def colour_name(self):
        return COLOUR_NAMES[self.colour]


@dataclass(frozen=True)
class CornerInfo:
    corner: int
    label: int          # exponent of s: 0, 1 or -1
    over_side: str      # "L" or "R" of the over-strand
    under_side: str     # "L" or "R" of the under-strand
    region: int

    @property
    def coherent(self):
        return self.label == 0


@dataclass(frozen=True)
class CornerFrame:
    """Corner data of one crossing.

    ``ik`` is the diagonal pair of corners labelled ``s^(+1)`` and
    ``s^(-1)`` (in that order), ``jl`` the diagonal pair labelled 1.
    Which member of a pair is called ``i`` or ``k`` is a free choice; the
    per-crossing block only depends on the partition.
    """
    crossing: int
    sign: int
    corners: tuple
    ik: tuple
    jl: tuple


def _is_out(pos, over_out):
    return pos == 2 or pos == over_out


@dataclass(frozen=True, eq=False)
class Diagram:
    pd: tuple
    over_out: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        pd = tuple(tuple(int(v) for v in x) for x in self.pd)
        object.__setattr__(self, "pd", pd)
        object.__setattr__(self, "over_out", tuple(self.over_out))
        if len(self.over_out) != len(pd):
            raise MalformedInputError("over_out length differs from crossing count")
        for x in pd:
            if len(x) != 4:
                raise MalformedInputError(f"crossing {x} does not have four edge-ends")
        for o in self.over_out:
            if o not in (1, 3):
                raise MalformedInputError("over-strand must leave through slot 1 or 3")
        self._validate()

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.pd == other.pd and self.over_out == other.over_out

    def __hash__(self):
        return hash((self.pd, self.over_out))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Diagram{label}: {self.n_crossings} crossings, {self.n_components} component(s)>"

    # -- basic structure ---------------------------------------------------

    @property
    def n_crossings(self):
        return len(self.pd)

    @property
    def n_edges(self):
        # a crossingless circle is one arc without endpoints
        return 2 * len(self.pd) if self.pd else 1

    @cached_property
    def slots_of(self):
        """Edge label -> the two slots ``(crossing, position)`` carrying it."""
        out = {}
        for x, quad in enumerate(self.pd):
            for p, e in enumerate(quad):
                out.setdefault(e, []).append((x, p))
        return out

    @cached_property
    def other_end(self):
        table = {}
        for e, (s1, s2) in self.slots_of.items():
            table[s1] = s2
            table[s2] = s1
        return table

    def is_out(self, slot):
        x, p = slot
        return _is_out(p, self.over_out[x])

    def tail(self, e):
        """Slot from which edge ``e`` leaves its start crossing."""
        s1, s2 = self.slots_of[e]
        return s1 if self.is_out(s1) else s2

    def head(self, e):
        s1, s2 = self.slots_of[e]
        return s2 if self.is_out(s1) else s1

    @cached_property
    def signs(self):
        return tuple(1 if o == 1 else -1 for o in self.over_out)

    @property
    def crossings(self):
        return [Crossing(i, q, o, s) for i, (q, o, s) in enumerate(zip(self.pd, self.over_out, self.signs))]

    @cached_property
    def component_edges(self):
        """Edges of each component in order of travel."""
        if not self.pd:
            return [[1]]
        seen = set()
        comps = []
        for start in sorted(self.slots_of):
            if start in seen:
                continue
            comp = []
            e = start
            while e not in seen:
                seen.add(e)
                comp.append(e)
                y, q = self.head(e)
                e = self.pd[y][(q + 2) % 4]
            comps.append(comp)
        return comps

    @property
    def n_components(self):
        return len(self.component_edges)

    # -- validation --------------------------------------------------------

    def _validate(self):
        n = len(self.pd)
        if n == 0:
            return
        labels = self.slots_of
        for e, where in labels.items():
            if len(where) != 2:
                raise EdgeLabelError(f"edge label {e} appears {len(where)} times, expected 2")
        if set(labels) != set(range(1, 2 * n + 1)):
            raise EdgeLabelError(f"edge labels must be exactly 1..{2 * n}")
        for e, (s1, s2) in labels.items():
            if self.is_out(s1) == self.is_out(s2):
                raise EdgeLabelError(f"edge {e} does not have one head and one tail")
        # connectivity of the underlying 4-valent graph
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (x, _), (y, _) in labels.values():
            parent[find(x)] = find(y)
        if len({find(x) for x in range(n)}) > 1:
            raise DisconnectedDiagramError("diagram is not connected")
        if n - 2 * n + len(self.faces) != 2:
            raise NonPlanarError(
                f"Euler check failed: {n} - {2 * n} + {len(self.faces)} != 2")

    # -- faces and colours ---------------------------------------------------

    @cached_property
    def faces(self):
        """Faces as tuples of corners ``(crossing, corner)``.

        Corner ``(x, q)`` is followed by the corner at the far end of the
        edge in slot ``q + 1``; the orbits of this map are the faces.  The
        face with the most corners (first one on ties) is taken as the
        unbounded face and listed first.
        """
        if not self.pd:
            return [(), ()]
        seen = set()
        faces = []
        for x in range(len(self.pd)):
            for q in range(4):
                if (x, q) in seen:
                    continue
                orbit = []
                c = (x, q)
                while c not in seen:
                    seen.add(c)
                    orbit.append(c)
                    c = self.other_end[(c[0], (c[1] + 1) % 4)]
                faces.append(tuple(orbit))
        outer = max(range(len(faces)), key=lambda i: (len(faces[i]), -i))
        return [faces[outer]] + faces[:outer] + faces[outer + 1:]

    @cached_property
    def corner_region(self):
        table = {}
        for r, face in enumerate(self.faces):
            for c in face:
                table[c] = r
        return table

    @property
    def n_regions(self):
        return len(self.faces)

    def edge_sides(self, e):
        """``(left_region, right_region)`` of edge ``e`` w.r.t. its orientation."""
        if not self.pd:
            return (0, 1)
        x, p = self.tail(e)
        return self.corner_region[(x, p)], self.corner_region[(x, (p - 1) % 4)]

    @cached_property
    def colours(self):
        """Checkerboard colouring with the unbounded region white."""
        n = self.n_regions
        if not self.pd:
            return (WHITE, BLACK)
        adj = [set() for _ in range(n)]
        for e in self.slots_of:
            left, right = self.edge_sides(e)
            if left == right:
                raise NonPlanarError(f"edge {e} has the same region on both sides")
            adj[left].add(right)
            adj[right].add(left)
        colour = [None] * n
        colour[0] = WHITE
        stack = [0]
        while stack:
            r = stack.pop()
            for s in adj[r]:
                if colour[s] is None:
                    colour[s] = 1 - colour[r]
                    stack.append(s)
                elif colour[s] == colour[r]:
                    raise NonPlanarError("regions admit no checkerboard colouring")
        return tuple(colour)

    def regions(self):
        return [Region(i, face, self.colours[i]) for i, face in enumerate(self.faces)]

    # -- corners -------------------------------------------------------------

    def corner_frame(self, x):
        sign = self.signs[x]
        labels = _LABELS[sign]
        # sides of corners 0..3 relative to the under-strand (slot 0 -> 2)
        under_sides = ("R", "R", "L", "L")
        # over-strand leaves through slot 1 for positive crossings
        over_sides = ("R", "L", "L", "R") if sign > 0 else ("L", "R", "R", "L")
        corners = tuple(
            CornerInfo(q, labels[q], over_sides[q], under_sides[q], self.corner_region[(x, q)])
            for q in range(4))
        i = labels.index(1)
        k = labels.index(-1)
        j, l = (q for q in range(4) if labels[q] == 0)
        return CornerFrame(x, sign, corners, (i, k), (j, l))

    def corner_colour(self, x, q):
        return self.colours[self.corner_region[(x, q)]]

    # -- derived text ----------------------------------------------------------

    def to_pd_text(self):
        return "; ".join("X " + " ".join(map(str, quad)) for quad in self.pd)


def writhe(D):
    return sum(D.signs)


def regions(D):
    return D.regions()


def checkerboard(D):
    return D.colours


def corner_frame(D, x):
    return D.corner_frame(x)


def is_connected(D):
    # construction rejects disconnected diagrams
    return True


def t_sign(D, x, colour):
    """``+1`` when the corners of the given colour at crossing ``x`` sit
    between two incoming or two outgoing strand ends, ``-1`` otherwise."""
    frame = D.corner_frame(x)
    q = frame.ik[0]
    return 1 if D.corner_colour(x, q) == colour else -1


def eta_sign(D, x, colour):
    """``+1`` when the quarter turn taking the under-strand counterclockwise
    onto the over-strand sweeps the corners not of the given colour."""
    # that quarter turn sweeps corners 0 and 2
    return 1 if D.corner_colour(x, 1) == colour else -1


def is_special(D):
    for colour in (WHITE, BLACK):
        if len({t_sign(D, x, colour) for x in range(D.n_crossings)}) > 1:
            return False
    return True


# -- construction helpers ------------------------------------------------------

def _relabel(pd, over_out):
    """Renumber edges 1..2n consecutively along each oriented component."""
    slots = {}
    for x, quad in enumerate(pd):
        for p, e in enumerate(quad):
            slots.setdefault(e, []).append((x, p))
    for e, where in slots.items():
        if len(where) != 2:
            raise EdgeLabelError(f"edge label {e} appears {len(where)} times, expected 2")

    def head(e):
        s1, s2 = slots[e]
        return s2 if _is_out(s1[1], over_out[s1[0]]) else s1

    new = {}
    for start in sorted(slots):
        if start in new:
            continue
        e = start
        while e not in new:
            new[e] = len(new) + 1
            y, q = head(e)
            e = pd[y][(q + 2) % 4]
    return tuple(tuple(new[e] for e in quad) for quad in pd)


def diagram_from_raw(pd, over_out, name=None):
    return Diagram(_relabel(pd, over_out), tuple(over_out), name)


def unknot(name=None):
    return Diagram((), (), name)


def _infer_over_out(pd):
    """Orientation of each over-strand from consecutive edge labels."""
    n = len(pd)
    slots = {}
    for x, quad in enumerate(pd):
        for p, e in enumerate(quad):
            slots.setdefault(e, []).append((x, p))
    for e, where in slots.items():
        if len(where) != 2:
            raise EdgeLabelError(f"edge label {e} appears {len(where)} times, expected 2")
    if set(slots) != set(range(1, 2 * n + 1)):
        raise EdgeLabelError(f"edge labels must be exactly 1..{2 * n}")
    # components: labels joined along strands through each crossing
    parent = {e: e for e in slots}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, c, d in pd:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    members = {}
    for e in slots:
        members.setdefault(find(e), []).append(e)
    succ = {}
    for labels in members.values():
        lo, hi = min(labels), max(labels)
        if sorted(labels) != list(range(lo, hi + 1)):
            raise EdgeLabelError(f"component labels {sorted(labels)} are not consecutive")
        for e in labels:
            succ[e] = e + 1 if e < hi else lo

    over_out = [None] * n
    for x, (a, b, c, d) in enumerate(pd):
        fwd, back = succ[d] == b, succ[b] == d
        if fwd and not back:
            over_out[x] = 1
        elif back and not fwd:
            over_out[x] = 3
        elif not fwd and not back:
            raise EdgeLabelError(f"over-strand labels {b}, {d} at crossing {x + 1} are not consecutive")
    # two-edge components: each edge needs exactly one outgoing slot
    while None in over_out:
        progress = False
        for x in range(n):
            if over_out[x] is not None:
                continue
            b = pd[x][1]
            other = next(s for s in slots[b] if s != (x, 1))
            y, q = other
            if q in (0, 2) or (q in (1, 3) and over_out[y] is not None and y != x):
                other_out = _is_out(q, over_out[y])
                over_out[x] = 3 if other_out else 1
                progress = True
        if not progress:
            over_out[over_out.index(None)] = 1
    return tuple(over_out)


_PD_RECORD = re.compile(r"^X\s*\[?\s*(-?\d+)[\s,]+(-?\d+)[\s,]+(-?\d+)[\s,]+(-?\d+)\s*\]?$")


def _strip_comments(text):
    name = None
    body = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("name:"):
            name = line[5:].strip() or None
            continue
        body.append(line)
    return name, "\n".join(body)


def parse_pd(text):
    """Parse ``X a b c d`` records separated by ``;`` or newlines.

    >>> D = parse_pd("X 1 5 2 4; X 3 1 4 6; X 5 3 6 2")
    >>> D.n_crossings, D.n_regions, writhe(D)
    (3, 5, 3)
    """
    name, body = _strip_comments(text)
    records = [r.strip() for r in re.split(r"[;\n]", body) if r.strip()]
    pd = []
    for rec in records:
        m = _PD_RECORD.match(rec)
        if not m:
            raise MalformedInputError(f"malformed crossing record {rec!r}")
        pd.append(tuple(int(v) for v in m.groups()))
    if not pd:
        return unknot(name)
    over_out = _infer_over_out(pd)
    D = Diagram(tuple(pd), over_out, name)
    # labels must run consecutively along every oriented component
    for comp in D.component_edges:
        lo, hi = min(comp), max(comp)
        for e, f in zip(comp, comp[1:] + comp[:1]):
            if f != (e + 1 if e < hi else lo):
                raise EdgeLabelError("edge labels are not consecutive along the orientation")
    return D


_BRAID = re.compile(r"^B\s*(\d+)\s*:(.*)$", re.S)


def parse_braid_word(text):
    name, body = _strip_comments(text)
    m = _BRAID.match(body.strip())
    if not m:
        raise MalformedInputError(f"malformed braid text {body!r}")
    strands = int(m.group(1))
    try:
        word = [int(tok) for tok in m.group(2).replace(",", " ").split()]
    except ValueError as exc:
        raise MalformedInputError(f"malformed braid word {m.group(2)!r}") from exc
    if strands < 1:
        raise MalformedInputError("a braid needs at least one strand")
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise MalformedInputError(f"generator {g} out of range for {strands} strands")
    return name, strands, word


def braid_closure(strands, word, name=None):
    """Diagram of the closure of a braid, all strands oriented upward.

    ``i`` denotes the positive crossing between positions ``i`` and ``i+1``.
    """
    if not word:
        if strands == 1:
            return unknot(name)
        raise DisconnectedDiagramError("closure of the empty braid is a split unlink")
    used = {abs(g) for g in word}
    if used != set(range(1, strands)):
        raise DisconnectedDiagramError("some generator is missing; the closure is split")
    events = [[] for _ in range(strands)]
    for k, g in enumerate(word):
        i = abs(g)
        events[i - 1].append(k)
        events[i].append(k)
    # segment (p, j) leaves crossing events[p][j] upward at position p
    seg = {}
    label = 0
    for p in range(strands):
        for j in range(len(events[p])):
            label += 1
            seg[(p, j)] = label
    leaving, arriving = {}, {}
    for p in range(strands):
        ev = events[p]
        for j, k in enumerate(ev):
            leaving[(k, p)] = seg[(p, j)]
            arriving[(k, p)] = seg[(p, j - 1)] if j else seg[(p, len(ev) - 1)]
    pd, over_out = [], []
    for k, g in enumerate(word):
        left, right = abs(g) - 1, abs(g)
        bl, br = arriving[(k, left)], arriving[(k, right)]
        tl, tr = leaving[(k, left)], leaving[(k, right)]
        if g > 0:
            pd.append((br, tr, tl, bl))
        else:
            pd.append((bl, br, tr, tl))
        over_out.append(1 if g > 0 else 3)
    return diagram_from_raw(pd, over_out, name)


def parse_braid(text):
    """
    >>> D = parse_braid("B 2: 1 1 1")
    >>> writhe(D), D.n_regions
    (3, 5)
    """
    name, strands, word = parse_braid_word(text)
    return braid_closure(strands, word, name)


def parse_diagram(text):
    """Dispatch on the text: braid words start with ``B``."""
    _, body = _strip_comments(text)
    if body.lstrip().startswith("B"):
        return parse_braid(text)
    return parse_pd(text)


# -- Reidemeister rewrites -----------------------------------------------------

def _fresh(pd):
    return max((e for quad in pd for e in quad), default=0) + 1


def r1_move(D, edge, chirality, side="left"):
    """Insert a curl of sign ``chirality`` on ``edge``; the small loop lies in
    the region on the given side of the edge."""
    if chirality not in (1, -1):
        raise MoveError("chirality must be +1 or -1")
    if side not in ("left", "right"):
        raise MoveError("side must be 'left' or 'right'")
    pd = [list(q) for q in D.pd]
    over_out = list(D.over_out)
    if not pd:
        if edge != 1:
            raise MoveError(f"no edge {edge}")
        in1 = out2 = 1
        loop = 2
    else:
        if edge not in D.slots_of:
            raise MoveError(f"no edge {edge}")
        fresh = _fresh(D.pd)
        in1, out2, loop = edge, fresh, fresh + 1
        y, q = D.head(edge)
        pd[y][q] = out2
    in2 = out1 = loop
    if side == "left":
        quad = (in1, out2, out1, in2) if chirality > 0 else (in2, in1, out2, out1)
    else:
        quad = (in2, out1, out2, in1) if chirality > 0 else (in1, in2, out1, out2)
    pd.append(list(quad))
    over_out.append(1 if chirality > 0 else 3)
    return diagram_from_raw(pd, over_out, D.name)


_CCW_FROM = {"W": ("W", "S", "E", "N"), "E": ("E", "N", "W", "S")}


def r2_move(D, edge_a, edge_b, region=None):
    """Push a finger of ``edge_a`` over ``edge_b`` through a region both
    edges bound, creating two crossings of opposite signs."""
    if edge_a not in D.slots_of or edge_b not in D.slots_of:
        raise MoveError("invalid edge id")
    if edge_a == edge_b:
        raise MoveError("an R2 move needs two different edges")
    sides_a, sides_b = D.edge_sides(edge_a), D.edge_sides(edge_b)
    common = [r for r in dict.fromkeys(sides_a) if r in sides_b]
    if region is None:
        if not common:
            raise MoveError(f"edges {edge_a} and {edge_b} do not bound a common region")
        region = common[0]
    elif region not in common:
        raise MoveError(f"edges {edge_a} and {edge_b} do not both bound region {region}")
    left_a = sides_a[0] == region
    left_b = sides_b[0] == region
    b_east = left_b != left_a

    pd = [list(q) for q in D.pd]
    over_out = list(D.over_out)
    fresh = _fresh(D.pd)
    a1, a2, a3 = edge_a, fresh, fresh + 1
    b1, b2, b3 = edge_b, fresh + 2, fresh + 3
    y, q = D.head(edge_a)
    pd[y][q] = a3
    y, q = D.head(edge_b)
    pd[y][q] = b3

    P = {"N": a1, "S": a2}
    Q = {"S": a2, "N": a3}
    if left_a:
        P = {"S": a1, "N": a2}
        Q = {"N": a2, "S": a3}
    if b_east:
        P.update(W=b1, E=b2)
        Q.update(W=b2, E=b3)
        under_in = "W"
    else:
        P.update(E=b2, W=b3)
        Q.update(E=b1, W=b2)
        under_in = "E"
    for comp, a_out in ((P, a2), (Q, a3)):
        order = _CCW_FROM[under_in]
        quad = [comp[d] for d in order]
        pos = next(i for i, d in enumerate(order) if comp[d] == a_out and d in ("N", "S"))
        pd.append(quad)
        over_out.append(pos)
    return diagram_from_raw(pd, over_out, D.name)


def random_rewrite(D, rng, moves=1):
    """Apply ``moves`` random R1/R2 rewrites using the ``random.Random``
    instance ``rng``."""
    for _ in range(moves):
        edges = sorted(D.slots_of) if D.pd else [1]
        if len(edges) < 2 or rng.random() < 0.4:
            D = r1_move(D, rng.choice(edges), rng.choice((1, -1)), rng.choice(("left", "right")))
            continue
        # pick a region and two distinct edges on its boundary
        by_region = {}
        for e in edges:
            for r in set(D.edge_sides(e)):
                by_region.setdefault(r, []).append(e)
        candidates = [r for r in sorted(by_region) if len(by_region[r]) >= 2]
        r = rng.choice(candidates)
        a, b = rng.sample(by_region[r], 2)
        D = r2_move(D, a, b, region=r)
    return D
