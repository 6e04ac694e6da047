"""Generalized Reidemeister calculus on Gauss codes.

Virtual moves (the virtual Reidemeister moves, the mixed move, and the
detour move) change only how a code is drawn in the plane, never the code
itself, so they are the identity here and only the classical moves R1, R2,
R3 appear as rewrites.  R3 applicability is table-driven: the legal
oriented/signed configurations ship as packaged data (see
tools/gen_r3_table.py for the geometric enumeration that produces it).

Also home to the switching and virtualization operators and a bounded
simplification search with move certificates.
"""

import itertools
import json
from collections import namedtuple

from .errors import NoSuchChord, NotApplicable
from .gausscodes import GaussCode, Token, serialize

MoveDescriptor = namedtuple("MoveDescriptor", ["kind", "site", "params"])
# kind: "R1+", "R1-", "R2+", "R2-", "R3"
# site: token positions (deletions, R3) or insertion gaps (insertions)
# params: orientation/sign data of inserted chords, None otherwise


def descriptor_to_json(m):
    return {"kind": m.kind, "site": list(m.site),
            "params": list(m.params) if m.params is not None else None}


def descriptor_from_json(obj):
    params = tuple(obj["params"]) if obj["params"] is not None else None
    site = tuple(tuple(x) if isinstance(x, list) else x
                 for x in obj["site"])
    return MoveDescriptor(obj["kind"], site, params)


# ---------------------------------------------------------------------------
# R3 legality table

_R3_TABLE = None


def r3_canonical_key(segments):
    """Canonical form of three two-token strand segments.

    Each segment is ((pair, passage, sign), (pair, passage, sign)) with
    pair in {"12","13","23"} naming which two of the three strands cross;
    the key is minimized over the six strand relabelings.
    """
    best = None
    for perm in itertools.permutations("123"):
        rename = {"1": perm[0], "2": perm[1], "3": perm[2]}

        def rn(pair):
            return "".join(sorted(rename[c] for c in pair))

        cand = tuple(sorted(
            tuple((rn(p), pas, sg) for p, pas, sg in seg)
            for seg in segments))
        if best is None or cand < best:
            best = cand
    return best


def _r3_table():
    global _R3_TABLE
    if _R3_TABLE is None:
        from importlib.resources import files
        raw = json.loads(files("vknot").joinpath("data/r3_table.json")
                         .read_text())
        _R3_TABLE = {r3_canonical_key(
            [tuple(tuple(e) for e in seg) for seg in cfg]) for cfg in raw}
    return _R3_TABLE


# ---------------------------------------------------------------------------
# pattern scanning

def _adjacent_pairs(code):
    """All ordered cyclically-adjacent token position pairs."""
    out = []
    for ci, comp in enumerate(code.components):
        k = len(comp)
        if k < 2:
            continue
        for i in range(k):
            out.append(((ci, i), (ci, (i + 1) % k)))
    return out


def _token_at(code, pos):
    ci, ti = pos
    return code.components[ci][ti]


def _find_r1_deletions(code):
    moves = []
    seen_chords = set()
    for p1, p2 in _adjacent_pairs(code):
        t1, t2 = _token_at(code, p1), _token_at(code, p2)
        if t1.chord == t2.chord and t1.chord not in seen_chords:
            seen_chords.add(t1.chord)
            moves.append(MoveDescriptor("R1-", (p1, p2), None))
    return moves


def _find_r2_deletions(code):
    """Two chords with opposite signs, one strand over at both crossings:
    an adjacent O,O pair and an adjacent U,U pair covering both chords
    (either order on the U side: parallel and antiparallel variants)."""
    moves = []
    pairs = _adjacent_pairs(code)
    o_pairs = []
    u_pairs = []
    for p1, p2 in pairs:
        t1, t2 = _token_at(code, p1), _token_at(code, p2)
        if t1.chord == t2.chord:
            continue
        if t1.passage == t2.passage == "O":
            o_pairs.append((p1, p2, t1, t2))
        elif t1.passage == t2.passage == "U":
            u_pairs.append((p1, p2, t1, t2))
    seen = set()
    for (op1, op2, ot1, ot2) in o_pairs:
        for (up1, up2, ut1, ut2) in u_pairs:
            if {ot1.chord, ot2.chord} != {ut1.chord, ut2.chord}:
                continue
            if ot1.sign != -ot2.sign:
                continue
            if len({op1, op2, up1, up2}) != 4:
                continue
            key = frozenset((ot1.chord, ot2.chord))
            if key in seen:
                continue
            seen.add(key)
            moves.append(MoveDescriptor("R2-", (op1, op2, up1, up2), None))
    return moves


def _find_r3_moves(code):
    """Triples of disjoint adjacent pairs covering three chords twice each,
    in a configuration the legality table admits."""
    moves = []
    pairs = _adjacent_pairs(code)
    by_chords = []
    for p1, p2 in pairs:
        t1, t2 = _token_at(code, p1), _token_at(code, p2)
        if t1.chord != t2.chord:
            by_chords.append((p1, p2, t1, t2))
    table = _r3_table()
    seen = set()
    for trio in itertools.combinations(by_chords, 3):
        positions = [p for seg in trio for p in seg[:2]]
        if len(set(positions)) != 6:
            continue
        # each chord must appear in exactly two of the three segments;
        # a crossing is then named by the pair of segments meeting there
        homes = {}
        for si, (_, _, t1, t2) in enumerate(trio):
            for t in (t1, t2):
                homes.setdefault(t.chord, []).append(si)
        if len(homes) != 3 or any(
                len(set(s)) != 2 for s in homes.values()):
            continue
        pair_label = {c: "".join(str(si + 1) for si in sorted(set(s)))
                      for c, s in homes.items()}
        segments = []
        for _, _, t1, t2 in trio:
            segments.append(tuple(
                (pair_label[t.chord], t.passage, t.sign)
                for t in (t1, t2)))
        if r3_canonical_key(segments) not in table:
            continue
        site = tuple(seg[:2] for seg in trio)
        key = tuple(sorted(positions))
        if key in seen:
            continue
        seen.add(key)
        moves.append(MoveDescriptor("R3", site, None))
    return moves


# ---------------------------------------------------------------------------
# applying moves

def _mutable(code):
    return [list(comp) for comp in code.components]


def _delete_positions(comps, positions):
    for ci, ti in sorted(positions, reverse=True):
        del comps[ci][ti]


def apply_move(code, m):
    """Rewrite the code by one move; raises NotApplicable if the descriptor
    does not match the code.  Chord ids are recanonicalized."""
    if code.kind != "classical":
        raise NotApplicable("moves operate on classical codes")
    if m.kind == "R1-":
        p1, p2 = m.site
        t1, t2 = _check_positions(code, (p1, p2))
        if t1.chord != t2.chord or not _is_adjacent(code, p1, p2):
            raise NotApplicable("no curl at site")
        comps = _mutable(code)
        _delete_positions(comps, (p1, p2))
        return GaussCode(comps)
    if m.kind == "R2-":
        if m not in set(_find_r2_deletions(code)):
            raise NotApplicable("no bigon at site")
        comps = _mutable(code)
        _delete_positions(comps, m.site)
        return GaussCode(comps)
    if m.kind == "R3":
        if m not in set(_find_r3_moves(code)):
            raise NotApplicable("no admissible triangle at site")
        comps = _mutable(code)
        for p1, p2 in m.site:
            (c1, i1), (c2, i2) = p1, p2
            comps[c1][i1], comps[c2][i2] = comps[c2][i2], comps[c1][i1]
        return GaussCode(comps)
    if m.kind == "R1+":
        (ci, gap), = m.site
        order, sign = m.params
        comps = _mutable(code) or [[]]
        if not 0 <= ci < len(comps) or not 0 <= gap <= len(comps[ci]):
            raise NotApplicable("insertion gap out of range")
        ch = max(code.chord_ids(), default=0) + 1
        first, second = ("O", "U") if order == "OU" else ("U", "O")
        comps[ci][gap:gap] = [Token(ch, first, sign), Token(ch, second, sign)]
        return GaussCode(comps)
    if m.kind == "R2+":
        (c1, g1), (c2, g2) = m.site
        over_first, parallel, sign = m.params
        comps = _mutable(code) or [[]]
        for ci, gap in ((c1, g1), (c2, g2)):
            if not 0 <= ci < len(comps) or not 0 <= gap <= len(comps[ci]):
                raise NotApplicable("insertion gap out of range")
        if (c1, g1) == (c2, g2):
            raise NotApplicable("insertion gaps must differ")
        ch = max(code.chord_ids(), default=0) + 1
        p, q = ch, ch + 1
        x = "O" if over_first else "U"
        y = "U" if over_first else "O"
        seg1 = [Token(p, x, sign), Token(q, x, -sign)]
        seg2 = ([Token(p, y, sign), Token(q, y, -sign)] if parallel
                else [Token(q, y, -sign), Token(p, y, sign)])
        # insert the later gap first so the earlier index stays valid
        sites = sorted([((c1, g1), seg1), ((c2, g2), seg2)],
                       key=lambda s: s[0], reverse=True)
        for (ci, gap), seg in sites:
            comps[ci][gap:gap] = seg
        return GaussCode(comps)
    raise NotApplicable("unknown move kind %r" % (m.kind,))


def _check_positions(code, positions):
    toks = []
    for ci, ti in positions:
        if not (0 <= ci < len(code.components)
                and 0 <= ti < len(code.components[ci])):
            raise NotApplicable("position out of range")
        toks.append(code.components[ci][ti])
    return toks


def _is_adjacent(code, p1, p2):
    (c1, i1), (c2, i2) = p1, p2
    if c1 != c2:
        return False
    k = len(code.components[c1])
    return k >= 2 and (i1 + 1) % k == i2


def enumerate_moves(code, insertions=True):
    """All applicable deletions and R3 rewrites, plus (optionally) the
    R1+/R2+ insertions at every gap."""
    moves = []
    moves.extend(_find_r1_deletions(code))
    moves.extend(_find_r2_deletions(code))
    moves.extend(_find_r3_moves(code))
    if not insertions:
        return moves
    gaps = []
    comps = code.components or ((),)
    for ci, comp in enumerate(comps):
        for gap in range(len(comp) + 1):
            gaps.append((ci, gap))
    for site in gaps:
        for order in ("OU", "UO"):
            for sign in (1, -1):
                moves.append(MoveDescriptor("R1+", (site,), (order, sign)))
    for s1, s2 in itertools.combinations(gaps, 2):
        for over_first in (True, False):
            for parallel in (True, False):
                for sign in (1, -1):
                    moves.append(MoveDescriptor(
                        "R2+", (s1, s2), (over_first, parallel, sign)))
    return moves


# ---------------------------------------------------------------------------
# switching and virtualization

def switch(code, i):
    """Switch crossing i: exchange over/under passages and flip the sign."""
    if i not in code.chord_ids():
        raise NoSuchChord("no chord %d" % i)
    comps = [[Token(t.chord,
                    ("U" if t.passage == "O" else "O")
                    if t.chord == i else t.passage,
                    -t.sign if t.chord == i else t.sign)
              for t in comp] for comp in code.components]
    return GaussCode(comps, code.kind)


def virtualize(code, i):
    """Virtualize crossing i: flanking the crossing with two virtual
    crossings reverses the local writhe contribution, so the chord's sign
    flips while its passages stay put.  This encoding is what makes the
    two defining identities hold exactly: the bracket ignores passage roles
    at a chord, so f(virtualize(K,i)) = f(switch(K,i)) (both flip the
    sign), and involutory-quandle colorings ignore signs, so they are
    untouched."""
    if i not in code.chord_ids():
        raise NoSuchChord("no chord %d" % i)
    comps = [[Token(t.chord, t.passage,
                    -t.sign if t.chord == i else t.sign)
              for t in comp] for comp in code.components]
    return GaussCode(comps, code.kind)


# ---------------------------------------------------------------------------
# simplification search

def _greedy_deletions(code):
    cert = []
    while True:
        moves = _find_r1_deletions(code) or _find_r2_deletions(code)
        if not moves:
            return code, cert
        m = min(moves, key=lambda mv: mv.site)
        cert.append(m)
        code = apply_move(code, m)


def simplify(code, budget=6):
    """Greedy R1-/R2- deletion (R1- preferred, leftmost site first), then a
    bounded breadth-first search over R3 rewrites, deletions, and a capped
    family of insertions (at most two chords above the input size).  Returns
    (code, certificate): the smallest code found and the move sequence
    reaching it; never larger than the input."""
    code, cert = _greedy_deletions(code)
    best = (code.n, serialize(code), code, cert)
    if code.n == 0 or budget <= 0:
        return best[2], best[3]
    cap = code.n + 2
    frontier = [(code, cert)]
    visited = {serialize(code)}
    for _ in range(budget):
        nxt = []
        for cur, path in frontier:
            moves = enumerate_moves(cur, insertions=False)
            if cur.n < cap:
                moves += [m for m in enumerate_moves(cur)
                          if m.kind == "R1+"]
            for m in moves:
                out = apply_move(cur, m)
                key = serialize(out)
                if key in visited:
                    continue
                visited.add(key)
                out2, extra = _greedy_deletions(out)
                key2 = serialize(out2)
                newpath = path + [m] + extra
                cand = (out2.n, key2, out2, newpath)
                if cand[:2] < best[:2]:
                    best = cand
                if key2 not in visited:
                    visited.add(key2)
                if out2.n <= cap:
                    nxt.append((out2, newpath))
            if len(visited) > 20000:
                return best[2], best[3]
        frontier = nxt
        if not frontier or best[0] == 0:
            break
    return best[2], best[3]
