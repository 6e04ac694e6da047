"""Gauss codes: parsing, validation, canonical form, genus, interlacement.

A Gauss code is the canonical diagram representation here; virtual crossings
are never stored (they are artifacts of drawing a code in the plane, produced
only by the realization routine in the planar module).

Token grammar: classical `O<k><sign>` / `U<k><sign>`, flat `F<k><sign>`,
free `C<k>`; tokens comma-separated, components joined by `|`.
"""

import itertools
import re
from collections import namedtuple

from .errors import (CodeSyntaxError, DanglingChord, MultiComponent,
                     PassageDuplicate, SignMismatch)

Token = namedtuple("Token", ["chord", "passage", "sign"])

_CLASSICAL_RE = re.compile(r"([OU])([0-9]+)([+-])\Z")
_FLAT_RE = re.compile(r"F([0-9]+)([+-])\Z")
_FREE_RE = re.compile(r"C([0-9]+)\Z")


class GaussCode:
    """Validated, canonically labeled Gauss code (immutable value type).

    kind is "classical", "flat", or "free"; flat tokens drop the passage,
    free tokens drop passage and sign.
    """

    __slots__ = ("components", "kind")

    def __init__(self, components, kind="classical"):
        comps = tuple(tuple(Token(*t) for t in comp) for comp in components)
        _validate(comps, kind)
        comps = _canonicalize(comps)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("GaussCode is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def n(self):
        """Number of chords (classical crossings)."""
        return sum(len(c) for c in self.components) // 2

    @property
    def component_count(self):
        return len(self.components)

    def chord_ids(self):
        return sorted({t.chord for c in self.components for t in c})

    def occurrences(self):
        """chord id -> list of (component index, position, token)."""
        occ = {}
        for ci, comp in enumerate(self.components):
            for ti, tok in enumerate(comp):
                occ.setdefault(tok.chord, []).append((ci, ti, tok))
        return occ

    def chord_sign(self, chord):
        for comp in self.components:
            for tok in comp:
                if tok.chord == chord:
                    return tok.sign
        return None

    def writhe(self):
        signs = {}
        for comp in self.components:
            for tok in comp:
                signs[tok.chord] = tok.sign
        return sum(s for s in signs.values() if s is not None)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, GaussCode)
                and self.kind == other.kind
                and self.components == other.components)

    def __hash__(self):
        return hash((self.kind, self.components))

    def __repr__(self):
        return "GaussCode(%r)" % serialize(self)

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {
            "kind": self.kind,
            "components": [[{"chord": t.chord, "passage": t.passage,
                             "sign": t.sign} for t in comp]
                           for comp in self.components],
        }

    @classmethod
    def from_json(cls, obj):
        comps = [[Token(t["chord"], t["passage"], t["sign"]) for t in comp]
                 for comp in obj["components"]]
        return cls(comps, obj["kind"])


def _validate(components, kind):
    if kind not in ("classical", "flat", "free"):
        raise CodeSyntaxError("unknown code kind %r" % (kind,))
    occ = {}
    for comp in components:
        for tok in comp:
            if not isinstance(tok.chord, int) or tok.chord < 1:
                raise CodeSyntaxError("chord ids must be positive integers")
            if kind == "classical" and tok.passage not in ("O", "U"):
                raise CodeSyntaxError("classical tokens need O/U passage")
            if kind != "classical" and tok.passage is not None:
                raise CodeSyntaxError("%s tokens carry no passage" % kind)
            if kind == "free":
                if tok.sign is not None:
                    raise CodeSyntaxError("free tokens carry no sign")
            elif tok.sign not in (1, -1):
                raise CodeSyntaxError("sign must be +1 or -1")
            occ.setdefault(tok.chord, []).append(tok)
    for chord, toks in occ.items():
        if len(toks) == 1:
            raise DanglingChord("chord %d occurs once" % chord)
        if len(toks) > 2:
            raise PassageDuplicate("chord %d occurs %d times"
                                   % (chord, len(toks)))
        a, b = toks
        if a.sign != b.sign:
            raise SignMismatch("chord %d has signs %r and %r"
                               % (chord, a.sign, b.sign))
        if kind == "classical" and {a.passage, b.passage} != {"O", "U"}:
            raise PassageDuplicate("chord %d passages %s,%s"
                                   % (chord, a.passage, b.passage))


def _canonicalize(components):
    relabel = {}
    for comp in components:
        for tok in comp:
            if tok.chord not in relabel:
                relabel[tok.chord] = len(relabel) + 1
    return tuple(tuple(Token(relabel[t.chord], t.passage, t.sign)
                       for t in comp)
                 for comp in components)


def parse_gauss(text):
    """Parse the Gauss-code grammar into a validated, canonicalized code."""
    text = text.strip()
    comps = []
    kind = None
    for part in text.split("|"):
        part = part.strip()
        comp = []
        if part:
            for raw in part.split(","):
                raw = raw.strip()
                m = _CLASSICAL_RE.match(raw)
                if m:
                    tok_kind = "classical"
                    tok = Token(int(m.group(2)), m.group(1),
                                1 if m.group(3) == "+" else -1)
                else:
                    m = _FLAT_RE.match(raw)
                    if m:
                        tok_kind = "flat"
                        tok = Token(int(m.group(1)), None,
                                    1 if m.group(2) == "+" else -1)
                    else:
                        m = _FREE_RE.match(raw)
                        if not m:
                            raise CodeSyntaxError("bad token %r" % raw)
                        tok_kind = "free"
                        tok = Token(int(m.group(1)), None, None)
                if kind is None:
                    kind = tok_kind
                elif kind != tok_kind:
                    raise CodeSyntaxError("mixed token kinds in one code")
                comp.append(tok)
        comps.append(comp)
    if all(not c for c in comps) and len(comps) == 1:
        comps = [[]]
    return GaussCode(comps, kind or "classical")


def serialize(code):
    """Inverse of parse_gauss on canonical codes."""
    parts = []
    for comp in code.components:
        toks = []
        for t in comp:
            if code.kind == "classical":
                toks.append("%s%d%s" % (t.passage, t.chord,
                                        "+" if t.sign > 0 else "-"))
            elif code.kind == "flat":
                toks.append("F%d%s" % (t.chord, "+" if t.sign > 0 else "-"))
            else:
                toks.append("C%d" % t.chord)
        parts.append(",".join(toks))
    return "|".join(parts)


def project_flat(code):
    """Forget over/under information; keep signs."""
    comps = [[Token(t.chord, None, t.sign) for t in comp]
             for comp in code.components]
    return GaussCode(comps, "flat")


def project_free(code):
    """Forget over/under information and signs."""
    comps = [[Token(t.chord, None, None) for t in comp]
             for comp in code.components]
    return GaussCode(comps, "free")


# ---------------------------------------------------------------------------
# carrier genus via face tracing of the abstract ribbon graph

def _chord_roles(code):
    """chord -> (over-role occurrence, under-role occurrence, sign).

    Occurrences are (component, position) pairs.  For flat/free codes the
    first occurrence plays the over role; free chords count as positive.
    """
    roles = {}
    occ = code.occurrences()
    for chord, places in occ.items():
        (c1, t1, tok1), (c2, t2, tok2) = places
        sign = tok1.sign if tok1.sign is not None else 1
        if code.kind == "classical":
            if tok1.passage == "O":
                roles[chord] = ((c1, t1), (c2, t2), sign)
            else:
                roles[chord] = ((c2, t2), (c1, t1), sign)
        else:
            roles[chord] = ((c1, t1), (c2, t2), sign)
    return roles


def _rotations(code):
    """chord -> counterclockwise cyclic slot order.

    Slots are (component, position, "in"/"out").  Convention: a positive
    chord has rotation (O_in, U_in, O_out, U_out); a negative chord
    (O_in, U_out, O_out, U_in).  Pinned by the classical-trefoil genus-0 and
    virtual-trefoil genus-1 checks.
    """
    rots = {}
    for chord, (opos, upos, sign) in _chord_roles(code).items():
        o_in, o_out = opos + ("in",), opos + ("out",)
        u_in, u_out = upos + ("in",), upos + ("out",)
        if sign > 0:
            rots[chord] = [o_in, u_in, o_out, u_out]
        else:
            rots[chord] = [o_in, u_out, o_out, u_in]
    return rots


def _trace_faces(code, comp_ids):
    """Count faces of the ribbon graph restricted to the given components."""
    rots = _rotations(code)
    slot_next = {}
    slot_of_token = {}
    for chord, rot in rots.items():
        (c1, t1, _) = rot[0]
        if c1 not in comp_ids:
            continue
        for a in range(4):
            slot_next[rot[a]] = rot[(a + 1) % 4]
    # darts: (component, arc index, direction); arc i runs token i -> i+1
    darts = set()
    for ci in comp_ids:
        k = len(code.components[ci])
        for i in range(k):
            darts.add((ci, i, 1))
            darts.add((ci, i, -1))

    def arrival_slot(dart):
        ci, i, d = dart
        k = len(code.components[ci])
        if d > 0:
            return (ci, (i + 1) % k, "in")
        return (ci, i, "out")

    def dart_from_slot(slot):
        ci, ti, side = slot
        k = len(code.components[ci])
        if side == "out":
            return (ci, ti, 1)
        return (ci, (ti - 1) % k, -1)

    faces = 0
    seen = set()
    for start in sorted(darts):
        if start in seen:
            continue
        faces += 1
        d = start
        while True:
            seen.add(d)
            nxt = dart_from_slot(slot_next[arrival_slot(d)])
            if nxt == start:
                break
            d = nxt
    return faces


def _ribbon_groups(code):
    """Partition non-empty components into chord-connected groups."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for ci, comp in enumerate(code.components):
        if comp:
            parent[ci] = ci
    for places in code.occurrences().values():
        (c1, _, _), (c2, _, _) = places
        union(c1, c2)
    groups = {}
    for ci in parent:
        groups.setdefault(find(ci), set()).add(ci)
    return list(groups.values())


def carrier_genus(code):
    """Genus of the closed oriented carrier surface of the code.

    g = (2 - V + E - F)/2 per connected ribbon-graph piece, summed; zero iff
    the code is realizable in the plane with no virtual crossings.
    """
    total = 0
    for comp_ids in _ribbon_groups(code):
        v = len({t.chord for ci in comp_ids
                 for t in code.components[ci]})
        e = sum(len(code.components[ci]) for ci in comp_ids)
        f = _trace_faces(code, comp_ids)
        chi = v - e + f
        total += (2 - chi) // 2
    return total


# ---------------------------------------------------------------------------
# intersection (interlacement) graph

class IntersectionGraph:
    """Simple graph on chords; edges join interleaved chords."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        # vertices: chord -> sign (None for free codes)
        object.__setattr__(self, "vertices", dict(vertices))
        object.__setattr__(self, "edges",
                           frozenset(frozenset(e) for e in edges))

    def __setattr__(self, name, value):
        raise AttributeError("IntersectionGraph is immutable")

    def __eq__(self, other):
        return (isinstance(other, IntersectionGraph)
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((frozenset(self.vertices.items()), self.edges))

    def to_json(self):
        return {
            "vertices": [{"chord": c, "sign": s}
                         for c, s in sorted(self.vertices.items())],
            "edges": sorted(sorted(e) for e in self.edges),
        }


def intersection_graph(code):
    """Interlacement graph of a single-component code."""
    if code.component_count != 1:
        raise MultiComponent("intersection graph needs a knot code")
    comp = code.components[0]
    pos = {}
    signs = {}
    for i, tok in enumerate(comp):
        pos.setdefault(tok.chord, []).append(i)
        signs[tok.chord] = tok.sign
    edges = []
    chords = sorted(pos)
    for i, c1 in enumerate(chords):
        a1, b1 = pos[c1]
        for c2 in chords[i + 1:]:
            inside = sum(1 for p in pos[c2] if a1 < p < b1)
            if inside == 1:
                edges.append((c1, c2))
    return IntersectionGraph(signs, edges)


def rotate_component(code, ci, k):
    """Cyclically rotate component ci by k positions (a new code)."""
    comps = [list(c) for c in code.components]
    comp = comps[ci]
    if comp:
        k %= len(comp)
        comps[ci] = comp[k:] + comp[:k]
    return GaussCode(comps, code.kind)


def codes_equivalent(a, b):
    """True if two codes agree up to reordering and rotating components.

    Chord labels are handled by the canonical relabeling every GaussCode
    carries, so this tests whether a and b describe the same cyclic token
    sequences -- the natural equality for codes read off a diagram, where
    neither a basepoint on each component nor a component order is recorded.
    Exponential only in the component count, which is small in practice.
    """
    if a.kind != b.kind or len(a.components) != len(b.components):
        return False
    m = len(b.components)
    for perm in itertools.permutations(range(m)):
        comps = [b.components[i] for i in perm]
        lens = [max(len(c), 1) for c in comps]
        for rots in itertools.product(*[range(k) for k in lens]):
            cand = GaussCode(
                [list(c[r:]) + list(c[:r]) for c, r in zip(comps, rots)],
                b.kind)
            if cand == a:
                return True
    return False
