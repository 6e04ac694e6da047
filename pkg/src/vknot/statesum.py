"""Kauffman bracket state sum, f-polynomial, atom profile, span bound.

States live directly on the chord diagram: each chord is resolved into the
oriented reconnection (in-ends joined to the opposite strand's out-ends) or
the disoriented one (in-ends joined, out-ends joined).  No planar embedding
is needed, which is exactly why virtual crossings never enter.
"""

from fractions import Fraction

from .errors import MultiComponent, ZeroBracket
from .laurent import LaurentPoly1

_DELTA = LaurentPoly1({2: -1, -2: -1})


def _arc_ends(code):
    """Per chord: the four arc-ends meeting it, keyed by role.

    Arc i of a component runs token i -> token i+1; its tail end sits at
    token i, its head end at token i+1.  Ends are ("h"|"t", comp, arc).
    """
    ends = {}
    for ci, comp in enumerate(code.components):
        k = len(comp)
        for ti, tok in enumerate(comp):
            e_in = ("h", ci, (ti - 1) % k)
            e_out = ("t", ci, ti)
            role = tok.passage or ("O" if tok.chord not in ends else "U")
            slot = ends.setdefault(tok.chord, {})
            slot[role + "_in"] = e_in
            slot[role + "_out"] = e_out
    return ends


def _state_pairing(code, choices, ends):
    """End-to-end pairing for one state.

    choices: chord -> "oriented" | "disoriented".
    """
    pair = {}
    for chord, slot in ends.items():
        if choices[chord] == "oriented":
            pairs = [(slot["O_in"], slot["U_out"]),
                     (slot["U_in"], slot["O_out"])]
        else:
            pairs = [(slot["O_in"], slot["U_in"]),
                     (slot["O_out"], slot["U_out"])]
        for a, b in pairs:
            pair[a] = b
            pair[b] = a
    return pair


def _trace_state(code, choices, ends):
    """Loops of a state as lists of (comp, arc, direction); plus free loops."""
    pair = _state_pairing(code, choices, ends)
    free_loops = sum(1 for comp in code.components if not comp)
    seen = set()
    loops = []
    for ci, comp in enumerate(code.components):
        for ai in range(len(comp)):
            for d in (1, -1):
                if (ci, ai, d) in seen or (ci, ai, -d) in seen:
                    continue
                loop = []
                cur = (ci, ai, d)
                while cur not in seen:
                    seen.add(cur)
                    loop.append(cur)
                    cci, cai, cd = cur
                    arrive = ("h", cci, cai) if cd > 0 else ("t", cci, cai)
                    nxt = pair[arrive]
                    side, nci, nai = nxt
                    cur = (nci, nai, 1 if side == "t" else -1)
                loops.append(loop)
                break
    return loops, free_loops


def _smoothing(sign, letter):
    """Which reconnection the A- or B-smoothing performs at a chord."""
    if sign > 0:
        return "oriented" if letter == "A" else "disoriented"
    return "disoriented" if letter == "A" else "oriented"


def bracket(code):
    """Kauffman bracket with <unknot> = 1 and loop value -A^2 - A^-2."""
    ends = _arc_ends(code)
    chords = sorted(ends)
    n = len(chords)
    total = LaurentPoly1()
    signs = {c: code.chord_sign(c) or 1 for c in chords}
    for mask in range(1 << n):
        exp = 0
        choices = {}
        for i, c in enumerate(chords):
            letter = "A" if not (mask >> i) & 1 else "B"
            exp += 1 if letter == "A" else -1
            choices[c] = _smoothing(signs[c], letter)
        loops, free = _trace_state(code, choices, ends)
        total = total + LaurentPoly1.monomial(exp) * _DELTA ** (len(loops) + free - 1)
    return total


def f_polynomial(code):
    """Writhe-normalized bracket (-A^3)^(-w) <K>; invariant under all moves."""
    w = code.writhe()
    unit = LaurentPoly1.monomial(-3 * w, 1 if w % 2 == 0 else -1)
    return unit * bracket(code)


class AtomProfile:
    """Loop counts of the extreme states plus genus and orientability."""

    __slots__ = ("sA", "sB", "genus", "orientable")

    def __init__(self, sA, sB, genus, orientable):
        object.__setattr__(self, "sA", sA)
        object.__setattr__(self, "sB", sB)
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "orientable", orientable)

    def __setattr__(self, name, value):
        raise AttributeError("AtomProfile is immutable")

    def __eq__(self, other):
        return (isinstance(other, AtomProfile)
                and (self.sA, self.sB, self.genus, self.orientable)
                == (other.sA, other.sB, other.genus, other.orientable))

    def __repr__(self):
        return ("AtomProfile(sA=%d, sB=%d, genus=%s, orientable=%s)"
                % (self.sA, self.sB, self.genus, self.orientable))

    def to_json(self):
        return {"sA": self.sA, "sB": self.sB,
                "genus": float(self.genus), "orientable": self.orientable}


def _loop_directions(loops):
    """arc -> (loop index, direction) from traced loops."""
    where = {}
    for li, loop in enumerate(loops):
        for ci, ai, d in loop:
            where[(ci, ai)] = (li, d)
    return where


def atom_profile(code):
    """Extreme-state structure of a classical knot code.

    genus is exact and may be half-integral: the atom of a virtual diagram
    can be non-orientable, where the integer Euler-genus formula fails.
    Orientability is decided by a 2-coloring feasibility check: the atom is
    orientable iff every state loop can be oriented so the two cells meeting
    along each diagram arc induce opposite directions on it.
    """
    if code.component_count != 1:
        raise MultiComponent("atom profile needs a knot code")
    ends = _arc_ends(code)
    chords = sorted(ends)
    n = len(chords)
    signs = {c: code.chord_sign(c) or 1 for c in chords}
    loops_a, free_a = _trace_state(
        code, {c: _smoothing(signs[c], "A") for c in chords}, ends)
    loops_b, free_b = _trace_state(
        code, {c: _smoothing(signs[c], "B") for c in chords}, ends)
    sA = len(loops_a) + free_a
    sB = len(loops_b) + free_b
    genus = Fraction(2 + n - sA - sB, 2)
    if n == 0:
        return AtomProfile(sA, sB, genus, True)

    where_a = _loop_directions(loops_a)
    where_b = _loop_directions(loops_b)
    # nodes: ("A", i) / ("B", j); each arc imposes eps_A*eps_B = -dirA*dirB
    color = {}
    ok = True
    adj = {}
    for arc in where_a:
        la, da = where_a[arc]
        lb, db = where_b[arc]
        parity = -da * db
        adj.setdefault(("A", la), []).append((("B", lb), parity))
        adj.setdefault(("B", lb), []).append((("A", la), parity))
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 1
        stack = [start]
        while stack:
            node = stack.pop()
            for other, parity in adj[node]:
                want = color[node] * parity
                if other not in color:
                    color[other] = want
                    stack.append(other)
                elif color[other] != want:
                    ok = False
    return AtomProfile(sA, sB, genus, ok)


def span_bound_check(code):
    """(span of <K>, 4n - 4*atom genus, span <= bound)."""
    br = bracket(code)
    if br.is_zero():
        raise ZeroBracket("bracket is zero; span undefined")
    profile = atom_profile(code)
    span = br.span()
    bound = 4 * code.n - 4 * profile.genus
    assert bound == int(bound)
    bound = int(bound)
    return span, bound, span <= bound
