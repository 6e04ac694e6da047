"""Planar diagrams: realization of Gauss codes, diagram-level flat moves,
and the inter-component virtual linking parity.

A PlanarDiagram stores 4-valent crossings as (kind, edges) with the four
edge labels in counterclockwise order; port 0 is an incoming edge (the
incoming under-edge for classical crossings), and strands always continue
through the opposite port.  The sign of a classical crossing is readable
from the tuple alone: it is positive exactly when port 1 (counterclockwise
next from the incoming under-edge) carries the outgoing over-edge.

realize() has two routes.  A code of carrier genus 0 is realized directly
from its rotation system — the rotations used for face tracing are a planar
embedding, so no virtual crossings appear.  Otherwise the code is drawn as
an exact-rational immersion in the plane: each classical crossing is a
small X with fixed over/under diagonals, consecutive passages are joined by
generic polyline arcs, and every unplanned intersection becomes a virtual
crossing.
"""

import itertools
import json
from collections import namedtuple
from fractions import Fraction

from .errors import CodeSyntaxError, NotApplicable
from .gausscodes import GaussCode, Token, _chord_roles, carrier_genus

Crossing = namedtuple("Crossing", ["kind", "edges"])
# kind: "classical" | "virtual" | "flat"


class PlanarDiagram:
    """Validated 4-valent diagram; free_loops counts crossing-free circles."""

    __slots__ = ("crossings", "free_loops", "_walks")

    def __init__(self, crossings, free_loops=0):
        crossings = tuple(Crossing(k, tuple(e)) for k, e in crossings)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "free_loops", int(free_loops))
        object.__setattr__(self, "_walks", None)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("PlanarDiagram is immutable")

    def _validate(self):
        count = {}
        for c in self.crossings:
            if c.kind not in ("classical", "virtual", "flat"):
                raise CodeSyntaxError("unknown crossing kind %r" % (c.kind,))
            if len(c.edges) != 4:
                raise CodeSyntaxError("crossings are 4-valent")
            for e in c.edges:
                count[e] = count.get(e, 0) + 1
        bad = [e for e, c in count.items() if c != 2]
        if bad:
            raise CodeSyntaxError("edges %r do not occur exactly twice" % bad)
        self.walks()  # raises if traversal is inconsistent

    def walks(self):
        """Closed strand walks as lists of (crossing index, entry port)."""
        if self._walks is not None:
            return self._walks
        slots = {}
        for xi, c in enumerate(self.crossings):
            for p, e in enumerate(c.edges):
                slots.setdefault(e, []).append((xi, p))
        entered = set()
        walks = []
        # start at port 0 (the distinguished in-port) wherever possible; a
        # strand that enters every crossing sideways is picked up at port 1
        starts = ([(xi, 0) for xi in range(len(self.crossings))]
                  + [(xi, 1) for xi in range(len(self.crossings))])
        for start in starts:
            if start in entered:
                continue
            # the sideways pass may enter at port 1 or port 3; do not restart
            # against the grain of a walk that already used this axis
            if start[1] == 1 and (start[0], 3) in entered:
                continue
            walk = []
            xi, port = start
            while (xi, port) not in entered:
                entered.add((xi, port))
                walk.append((xi, port))
                out_port = (port + 2) % 4
                edge = self.crossings[xi].edges[out_port]
                (a, pa), (b, pb) = slots[edge]
                xi, port = (b, pb) if (a, pa) == (xi, out_port) else (a, pa)
            if walk[0] != (xi, port):
                raise CodeSyntaxError("inconsistent edge orientations")
            walks.append(walk)
        # every crossing must be passed exactly twice in total
        passes = {}
        for walk in walks:
            for xi, _ in walk:
                passes[xi] = passes.get(xi, 0) + 1
        if any(v != 2 for v in passes.values()) or (
                self.crossings and len(passes) != len(self.crossings)):
            raise CodeSyntaxError("diagram traversal does not close up")
        object.__setattr__(self, "_walks", walks)
        return walks

    @property
    def classical_count(self):
        return sum(1 for c in self.crossings
                   if c.kind in ("classical", "flat"))

    @property
    def virtual_count(self):
        return sum(1 for c in self.crossings if c.kind == "virtual")

    @property
    def component_count(self):
        return len(self.walks()) + self.free_loops

    def __eq__(self, other):
        return (isinstance(other, PlanarDiagram)
                and self.crossings == other.crossings
                and self.free_loops == other.free_loops)

    def __repr__(self):
        return ("PlanarDiagram(%d classical/flat, %d virtual, %d loops)"
                % (self.classical_count, self.virtual_count,
                   self.component_count))

    def to_json(self):
        return {"crossings": [{"kind": c.kind, "edges": list(c.edges)}
                              for c in self.crossings],
                "free_loops": self.free_loops}

    @classmethod
    def from_json(cls, obj):
        return cls([(c["kind"], c["edges"]) for c in obj["crossings"]],
                   obj.get("free_loops", 0))

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


def read_code(diagram):
    """Gauss code of the classical (or flat) crossings of a diagram.

    Virtual crossings are passed through silently; components that never
    meet a classical/flat crossing become empty components.
    """
    walks = diagram.walks()
    kinds = {c.kind for c in diagram.crossings}
    flat = "flat" in kinds
    if flat and "classical" in kinds:
        raise CodeSyntaxError("mixed flat and classical crossings")
    # second-strand incoming ports, from the walks
    entry_ports = {}
    for walk in walks:
        for xi, p in walk:
            entry_ports.setdefault(xi, []).append(p)
    comps = []
    chord_of = {}
    for walk in walks:
        toks = []
        for xi, p in walk:
            c = diagram.crossings[xi]
            if c.kind == "virtual":
                continue
            chord = chord_of.setdefault(xi, len(chord_of) + 1)
            other_in = [q for q in entry_ports[xi] if q != p]
            ports = sorted(entry_ports[xi])
            if ports == [0, 2] or len(set(entry_ports[xi])) == 1:
                raise CodeSyntaxError("strand enters both opposite ports")
            # the under strand uses ports 0/2, entering at 0
            under = p == 0
            over_in = other_in[0] if under else p
            sign = 1 if over_in == 3 else -1
            if flat:
                toks.append(Token(chord, None, sign))
            else:
                toks.append(Token(chord, "U" if under else "O", sign))
        comps.append(toks)
    comps.extend([[]] * diagram.free_loops)
    return GaussCode(comps, "flat" if flat else "classical")


# ---------------------------------------------------------------------------
# realization: genus-0 route

def _rotation_tuple(sign, uin, uout, oin, oout, kind):
    """CCW edge tuple starting from the incoming under-edge."""
    if sign >= 0:
        return (uin, oout, uout, oin)
    return (uin, oin, uout, oout)


def _realize_planar(code):
    roles = _chord_roles(code)
    kind = {"classical": "classical", "flat": "flat",
            "free": "flat"}[code.kind]
    edge_ix = {}
    counter = itertools.count(1)
    free_loops = 0
    for ci, comp in enumerate(code.components):
        if not comp:
            free_loops += 1
            continue
        for ti in range(len(comp)):
            edge_ix[(ci, ti)] = next(counter)
    crossings = []
    for chord in sorted(roles):
        (oc, ot), (uc, ut), sign = roles[chord]
        ko, ku = len(code.components[oc]), len(code.components[uc])
        oin = edge_ix[(oc, (ot - 1) % ko)]
        oout = edge_ix[(oc, ot)]
        uin = edge_ix[(uc, (ut - 1) % ku)]
        uout = edge_ix[(uc, ut)]
        crossings.append((kind, _rotation_tuple(sign, uin, uout, oin, oout,
                                                kind)))
    return PlanarDiagram(crossings, free_loops)


# ---------------------------------------------------------------------------
# realization: geometric route (exact rational immersion)

def _seg_intersect(p, q, r, s):
    """Strictly interior intersection of segments pq and rs, or None."""
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    w = (r[0] - p[0], r[1] - p[1])
    t = Fraction(w[0] * d2[1] - w[1] * d2[0], den)
    u = Fraction(w[0] * d1[1] - w[1] * d1[0], den)
    if not (0 < t < 1 and 0 < u < 1):
        return None
    return (t, u, (p[0] + t * d1[0], p[1] + t * d1[1]))


def _on_segment(x, p, q):
    if x == p or x == q:
        return False
    cross = ((q[0] - p[0]) * (x[1] - p[1])
             - (q[1] - p[1]) * (x[0] - p[0]))
    if cross != 0:
        return False
    dot = ((x[0] - p[0]) * (q[0] - p[0]) + (x[1] - p[1]) * (q[1] - p[1]))
    length2 = (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2
    return 0 < dot < length2


def _build_pieces(code, roles, perturb):
    """Strand pieces per component: diagonals through each crossing's X and
    connecting arcs between consecutive passages."""
    role_at = {}
    for chord, (opos, upos, sign) in roles.items():
        role_at[opos] = "O"
        role_at[upos] = "U"
    chord_index = {ch: i for i, ch in enumerate(code.chord_ids())}
    half = Fraction(1)

    def ports(i):
        x = 4 * i
        return {"SW": (x - half, -half), "NE": (x + half, half),
                "SE": (x + half, -half), "NW": (x - half, half)}

    def passage_ports(chord, role, sign):
        p = ports(chord_index[chord])
        if role == "O":
            return p["SW"], p["NE"]
        if sign >= 0:
            return p["SE"], p["NW"]
        return p["NW"], p["SE"]

    pieces = []     # (comp, kind, payload, [segments])
    arc_id = itertools.count()
    for ci, comp in enumerate(code.components):
        k = len(comp)
        if k == 0:
            continue
        stops = []
        for ti, tok in enumerate(comp):
            sign = tok.sign if tok.sign is not None else 1
            pin, pout = passage_ports(tok.chord, role_at[(ci, ti)], sign)
            stops.append((tok.chord, role_at[(ci, ti)], pin, pout))
        for ti, (chord, role, pin, pout) in enumerate(stops):
            pieces.append((ci, "diag", (chord, role), [(pin, pout)]))
            nxt = stops[(ti + 1) % k][2]
            a = next(arc_id)
            mid = (Fraction(4 * len(chord_index) + 3 + 5 * a
                            + perturb * (a * a + 1), 1),
                   Fraction(7 + 9 * a + perturb * (2 * a + 3),
                            2 * perturb + 1))
            pieces.append((ci, "arc", a, [(pout, mid), (mid, nxt)]))
    return pieces


def _realize_geometric(code):
    roles = _chord_roles(code)
    for perturb in range(1, 60):
        pieces = _build_pieces(code, roles, perturb)
        segs = []
        for pi, (ci, kind, payload, slist) in enumerate(pieces):
            for si, (p, q) in enumerate(slist):
                segs.append((pi, si, p, q))
        ok = True
        events = {}   # (piece, seg) -> list of (t, point, crossing key)
        seen_points = {}
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                pi1, si1, p, q = segs[i]
                pi2, si2, r, s = segs[j]
                if pi1 == pi2:
                    continue  # segments of one piece only meet at joints
                hit = _seg_intersect(p, q, r, s)
                if hit is None:
                    continue
                t, u, point = hit
                d1 = pieces[pi1]
                d2 = pieces[pi2]
                if (d1[1] == d2[1] == "diag"
                        and d1[2][0] == d2[2][0]):
                    key = ("x", d1[2][0])
                else:
                    key = ("v", point)
                if point in seen_points and seen_points[point] != (i, j):
                    ok = False
                    break
                seen_points[point] = (i, j)
                events.setdefault((pi1, si1), []).append((t, point, key))
                events.setdefault((pi2, si2), []).append((u, point, key))
            if not ok:
                break
        if ok:
            # endpoints of one segment must not lie inside another
            pts = {p for _, _, p, q in segs} | {q for _, _, p, q in segs}
            for _, _, p, q in segs:
                if any(_on_segment(x, p, q) for x in pts):
                    ok = False
                    break
        if not ok:
            continue
        return _assemble(code, pieces, events)
    raise NotApplicable("could not find a generic immersion")


def _assemble(code, pieces, events):
    # classical crossings must exist for every chord
    by_comp = {}
    for pi, piece in enumerate(pieces):
        by_comp.setdefault(piece[0], []).append((pi, piece))
    free_loops = sum(1 for comp in code.components if not comp)
    # walk each component, recording ordered crossing passes
    passes = {}   # crossing key -> list of (edge_in, edge_out, direction)
    order = {}    # crossing key -> id
    edge_counter = itertools.count(1)
    comp_of_pass = {}
    for ci in sorted(by_comp):
        seq = []  # (key, direction at the pass)
        for pi, (c, kind, payload, slist) in by_comp[ci]:
            for si, (p, q) in enumerate(slist):
                evs = sorted(events.get((pi, si), []))
                d = (q[0] - p[0], q[1] - p[1])
                for t, point, key in evs:
                    seq.append((key, d))
        if not seq:
            free_loops += 1
            continue
        k = len(seq)
        first_edge = next(edge_counter)
        edge = first_edge
        for idx, (key, d) in enumerate(seq):
            nxt = next(edge_counter) if idx < k - 1 else first_edge
            passes.setdefault(key, []).append((edge, nxt, d, ci))
            comp_of_pass.setdefault(key, []).append(ci)
            edge = nxt
    crossings = []
    kind_cls = {"classical": "classical", "flat": "flat",
                "free": "flat"}[code.kind]
    for key, plist in passes.items():
        if len(plist) != 2:
            raise NotApplicable("degenerate immersion")
        if key[0] == "x":
            chord = key[1]
            # the under pass is the one on the SE/NW diagonal: its
            # direction has slope -1; the over diagonal has slope +1
            (e1, o1, d1, _), (e2, o2, d2, _) = plist
            under1 = d1[0] * d1[1] < 0
            (ue, uo, ud), (oe, oo, od) = (
                ((e1, o1, d1), (e2, o2, d2)) if under1
                else ((e2, o2, d2), (e1, o1, d1)))
            tup = _cross_tuple(ue, uo, ud, oe, oo, od)
            crossings.append((kind_cls, tup))
        else:
            (e1, o1, d1, _), (e2, o2, d2, _) = plist
            tup = _cross_tuple(e1, o1, d1, e2, o2, d2)
            crossings.append(("virtual", tup))
    return PlanarDiagram(crossings, free_loops)


def _cross_tuple(e1_in, e1_out, d1, e2_in, e2_out, d2):
    """CCW port order starting from strand 1's incoming edge."""
    det = d1[0] * d2[1] - d1[1] * d2[0]
    if det > 0:
        return (e1_in, e2_in, e1_out, e2_out)
    return (e1_in, e2_out, e1_out, e2_in)


def realize(code):
    """PlanarDiagram of a Gauss code; genus-0 codes come out with no
    virtual crossings, others via the generic immersion."""
    if code.n == 0:
        return PlanarDiagram([], free_loops=max(code.component_count, 1))
    if carrier_genus(code) == 0:
        return _realize_planar(code)
    return _realize_geometric(code)


# ---------------------------------------------------------------------------
# diagram statistics

class DiagramStats(namedtuple("DiagramStats", ["n", "v", "g", "components"])):
    """Classical crossing count, virtual count, carrier genus, components."""

    def to_json(self):
        return {"n": self.n, "v": self.v, "g": self.g,
                "components": self.components}


def diagram_stats(diagram):
    code = read_code(diagram)
    return DiagramStats(diagram.classical_count, diagram.virtual_count,
                        carrier_genus(code), diagram.component_count)


def code_stats(code):
    d = realize(code)
    return DiagramStats(code.n, d.virtual_count, carrier_genus(code),
                        code.component_count)


# ---------------------------------------------------------------------------
# diagram-level flat moves (used for the flat-linking parity invariance)

def _edge_slots(diagram):
    slots = {}
    for xi, c in enumerate(diagram.crossings):
        for p, e in enumerate(c.edges):
            slots.setdefault(e, []).append((xi, p))
    return slots


def _component_of_edges(diagram):
    """edge label -> walk index (component)."""
    comp = {}
    for wi, walk in enumerate(diagram.walks()):
        for xi, p in walk:
            comp[diagram.crossings[xi].edges[p]] = wi
            comp[diagram.crossings[xi].edges[(p + 2) % 4]] = wi
    return comp


def flat_linking_parity(diagram):
    """Mod-2 number of virtual crossings whose two strands lie on
    different components."""
    comp = _component_of_edges(diagram)
    total = 0
    for c in diagram.crossings:
        if c.kind != "virtual":
            continue
        if comp[c.edges[0]] != comp[c.edges[1]]:
            total += 1
    return total % 2


def insert_curl(diagram, edge, kind="virtual", side=0):
    """Split an edge and add a one-crossing curl of the given kind."""
    slots = _edge_slots(diagram)
    if edge not in slots:
        raise NotApplicable("no edge %r" % (edge,))
    new1 = max(slots) + 1
    new2 = new1 + 1
    crossings = []
    # edge runs tail -> head; rename the head half to new1 and hang the
    # loop edge new2 on the new crossing
    renamed_head = False
    for xi, c in enumerate(diagram.crossings):
        edges = list(c.edges)
        for p, e in enumerate(edges):
            if e == edge and not _is_outgoing(diagram, xi, p):
                edges[p] = new1
                renamed_head = True
        crossings.append((c.kind, edges))
    if not renamed_head:
        raise NotApplicable("edge head not found")
    if side == 0:
        crossings.append((kind, (edge, new2, new2, new1)))
    else:
        crossings.append((kind, (edge, new1, new2, new2)))
    return PlanarDiagram(crossings, diagram.free_loops)


def delete_curl(diagram, xi):
    """Remove a one-crossing curl (a crossing with a doubled edge)."""
    c = diagram.crossings[xi]
    edges = c.edges
    loop = None
    for e in edges:
        if edges.count(e) == 2:
            loop = e
    if loop is None:
        raise NotApplicable("crossing %d is not a curl" % xi)
    through = [e for e in edges if e != loop]
    if len(through) != 2:
        raise NotApplicable("crossing %d is not a curl" % xi)
    a, b = through
    keep, drop = (a, b) if a < b else (b, a)
    crossings = []
    for yi, c2 in enumerate(diagram.crossings):
        if yi == xi:
            continue
        crossings.append((c2.kind,
                          [keep if e == drop else e for e in c2.edges]))
    if not crossings:
        return PlanarDiagram([], diagram.free_loops + 1)
    return PlanarDiagram(crossings, diagram.free_loops)


def insert_bigon(diagram, edge1, edge2, kind="virtual"):
    """Push edge1 across edge2, adding two crossings of the given kind."""
    if edge1 == edge2:
        raise NotApplicable("bigon needs two distinct edges")
    slots = _edge_slots(diagram)
    if edge1 not in slots or edge2 not in slots:
        raise NotApplicable("missing edge")
    base = max(slots)
    a1, a2 = base + 1, base + 2   # new pieces of edge1, edge2
    m1, m2 = base + 3, base + 4   # middle pieces
    crossings = []
    for xi, c in enumerate(diagram.crossings):
        edges = list(c.edges)
        for p, e in enumerate(edges):
            if e == edge1 and not _is_outgoing(diagram, xi, p):
                edges[p] = a1
            if e == edge2 and not _is_outgoing(diagram, xi, p):
                edges[p] = a2
        crossings.append((c.kind, edges))
    # first crossing: edge1 in, m1 out; edge2 in, m2 out
    crossings.append((kind, (edge1, edge2, m1, m2)))
    # second crossing: m1 in, a1 out; m2 in, a2 out
    crossings.append((kind, (m1, m2, a1, a2)))
    return PlanarDiagram(crossings, diagram.free_loops)


def delete_bigon(diagram, xi, yi):
    """Remove two crossings joined by two parallel edges."""
    if xi == yi:
        raise NotApplicable("bigon needs two crossings")
    cx, cy = diagram.crossings[xi], diagram.crossings[yi]
    shared = set(cx.edges) & set(cy.edges)
    if len(shared) != 2:
        raise NotApplicable("crossings do not bound a bigon")
    # match incoming to outgoing on the same strand through the bigon
    pairs = _bigon_strand_pairs(diagram, xi, yi, shared)
    if pairs is None:
        raise NotApplicable("bigon strands are not parallel")
    rename = {}
    closed_loops = 0
    for e_in, e_out in pairs:
        if e_in == e_out:
            closed_loops += 1
        else:
            rename[e_out] = e_in

    def resolve(e):
        seen = set()
        while e in rename:
            if e in seen:
                return e
            seen.add(e)
            e = rename[e]
        return e

    crossings = []
    survivors = set()
    for zi, c in enumerate(diagram.crossings):
        if zi in (xi, yi):
            continue
        edges = [resolve(e) for e in c.edges]
        survivors.update(edges)
        crossings.append((c.kind, edges))
    # rename chains that never reach a surviving crossing are circles the
    # splice closed off entirely
    visited = set()
    for e_out in rename:
        if e_out in visited:
            continue
        chain = {e_out}
        e = e_out
        while e in rename and rename[e] not in chain:
            e = rename[e]
            chain.add(e)
        visited |= chain
        if not (chain & survivors):
            closed_loops += 1
    return PlanarDiagram(crossings, diagram.free_loops + closed_loops)


def _bigon_strand_pairs(diagram, xi, yi, shared):
    """(incoming outer edge, outgoing outer edge) per strand through a
    bigon, or None when the two crossings are not a parallel bigon."""
    pairs = []
    for walk in diagram.walks():
        k = len(walk)
        for idx, (zi, p) in enumerate(walk):
            if zi != xi:
                continue
            nzi, np_ = walk[(idx + 1) % k]
            if nzi != yi:
                continue
            mid = diagram.crossings[zi].edges[(p + 2) % 4]
            if mid not in shared:
                continue
            e_in = diagram.crossings[zi].edges[p]
            e_out = diagram.crossings[nzi].edges[(np_ + 2) % 4]
            pairs.append((e_in, e_out))
        for idx, (zi, p) in enumerate(walk):
            if zi != yi:
                continue
            nzi, np_ = walk[(idx + 1) % k]
            if nzi != xi:
                continue
            mid = diagram.crossings[zi].edges[(p + 2) % 4]
            if mid not in shared:
                continue
            e_in = diagram.crossings[zi].edges[p]
            e_out = diagram.crossings[nzi].edges[(np_ + 2) % 4]
            pairs.append((e_in, e_out))
    return pairs if len(pairs) == 2 else None


def _is_outgoing(diagram, xi, p):
    """Whether the edge at (crossing xi, port p) leaves the crossing."""
    for walk in diagram.walks():
        for (zi, q) in walk:
            if zi == xi and (q + 2) % 4 == p:
                return True
            if zi == xi and q == p:
                return False
    raise NotApplicable("port not on any walk")


def _is_outgoing_c(diagram, c, p):
    xi = diagram.crossings.index(c)
    return _is_outgoing(diagram, xi, p)


def random_flat_moves(diagram, count, rng):
    """Apply `count` randomized diagram-level flat/virtual moves; returns
    the final diagram.  Moves: virtual or flat curls and bigons, inserted
    or (when a matching pattern exists) deleted."""
    for _ in range(count):
        for _attempt in range(20):
            slots = sorted(_edge_slots(diagram))
            choice = rng.choice(["curl+", "curl-", "bigon+", "bigon-"])
            try:
                if choice == "curl+" and slots:
                    diagram = insert_curl(
                        diagram, rng.choice(slots),
                        kind=rng.choice(["virtual", "flat"]),
                        side=rng.choice([0, 1]))
                elif choice == "curl-":
                    cands = [xi for xi, c in enumerate(diagram.crossings)
                             if len(set(c.edges)) == 3]
                    if not cands:
                        raise NotApplicable("no curl")
                    diagram = delete_curl(diagram, rng.choice(cands))
                elif choice == "bigon+" and len(slots) >= 2:
                    e1, e2 = rng.sample(slots, 2)
                    diagram = insert_bigon(
                        diagram, e1, e2,
                        kind=rng.choice(["virtual", "flat"]))
                elif choice == "bigon-":
                    cands = []
                    for xi, yi in itertools.combinations(
                            range(len(diagram.crossings)), 2):
                        cx = diagram.crossings[xi]
                        cy = diagram.crossings[yi]
                        if cx.kind != cy.kind:
                            continue
                        if len(set(cx.edges) & set(cy.edges)) == 2:
                            cands.append((xi, yi))
                    if not cands:
                        raise NotApplicable("no bigon")
                    xi, yi = rng.choice(cands)
                    diagram = delete_bigon(diagram, xi, yi)
                else:
                    raise NotApplicable("no site")
                break
            except (NotApplicable, CodeSyntaxError):
                continue
    return diagram
