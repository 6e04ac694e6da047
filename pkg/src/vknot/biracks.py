"""Finite biracks, biquandles and involutory quandles; coloring counts.

Tables are row-major: up[a][b] = a^b, down[a][b] = a_b, and the barred
(left) operations up_bar[a][b] = a^(b bar), down_bar[a][b] = a_(b bar).
The barred tables are determined by the unbarred ones through the inverse
of the switch map S(a,b) = (b_a, a^b) and are derived automatically when
not supplied.
"""

import itertools

from .errors import SizeCap


def _as_table(t):
    return tuple(tuple(int(x) for x in row) for row in t)


class FiniteBirack:
    """Four operation tables on labels 0..m-1, with axiom flags on demand."""

    __slots__ = ("m", "up", "down", "up_bar", "down_bar", "name", "_report")

    def __init__(self, up, down, up_bar=None, down_bar=None, name=None):
        up = _as_table(up)
        down = _as_table(down)
        m = len(up)
        if up_bar is None or down_bar is None:
            ub, db = _derive_bars(up, down)
            up_bar = up_bar if up_bar is not None else ub
            down_bar = down_bar if down_bar is not None else db
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", down)
        object.__setattr__(self, "up_bar", _as_table(up_bar))
        object.__setattr__(self, "down_bar", _as_table(down_bar))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_report", None)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteBirack is immutable")

    def labels(self):
        return range(self.m)

    def switch(self, a, b):
        return (self.down[b][a], self.up[a][b])

    def switch_bar(self, a, b):
        return (self.up_bar[b][a], self.down_bar[a][b])

    def tables(self):
        return (self.up, self.down, self.up_bar, self.down_bar)

    def report(self):
        if self._report is None:
            object.__setattr__(self, "_report", check_axioms(self))
        return self._report

    @property
    def is_birack(self):
        return self.report()["is_birack"]

    @property
    def is_biquandle(self):
        return self.report()["is_biquandle"]

    @property
    def is_strong(self):
        return self.report()["is_strong"]

    def __eq__(self, other):
        return (isinstance(other, FiniteBirack)
                and self.tables() == other.tables())

    def __hash__(self):
        return hash(self.tables())

    def __repr__(self):
        return "FiniteBirack(m=%d%s)" % (
            self.m, ", name=%r" % self.name if self.name else "")

    def to_json(self):
        return {"m": self.m, "up": self.up, "down": self.down,
                "up_bar": self.up_bar, "down_bar": self.down_bar,
                "name": self.name}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["up"], obj["down"], obj["up_bar"], obj["down_bar"],
                   obj.get("name"))


def _derive_bars(up, down):
    """Barred tables from the inverse switch: S_bar = S^{-1}.

    With S(a,b) = (b_a, a^b) and S_bar(a,b) = (b^(a bar), a_(b bar)), the
    identity S_bar = S^{-1} pins every barred entry.
    """
    m = len(up)
    inv = {}
    for a in range(m):
        for b in range(m):
            key = (down[b][a], up[a][b])
            if key in inv:
                raise ValueError("switch map is not a bijection")
            inv[key] = (a, b)
    up_bar = [[0] * m for _ in range(m)]
    down_bar = [[0] * m for _ in range(m)]
    for (c, d), (a, b) in inv.items():
        # S_bar(c,d) = (a,b) means d^(c bar) = a and c_(d bar) = b
        up_bar[d][c] = a
        down_bar[c][d] = b
    return up_bar, down_bar


def parse_birack(text, name=None):
    """Birack from the table file format: order m, then four m*m matrices."""
    nums = [int(x) for x in text.split()]
    m = nums[0]
    need = 1 + 4 * m * m
    if len(nums) != need:
        raise ValueError("expected %d integers, got %d" % (need, len(nums)))
    mats = []
    pos = 1
    for _ in range(4):
        mat = [nums[pos + r * m: pos + (r + 1) * m] for r in range(m)]
        mats.append(mat)
        pos += m * m
    return FiniteBirack(*mats, name=name)


def format_birack(b):
    lines = [str(b.m)]
    for t in b.tables():
        for row in t:
            lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# axiom checking (elementwise formulation)

def check_axioms(b):
    """Per-axiom report with witnessing counterexamples on failure.

    Axioms follow the four-part biquandle definition: kink (1), inverse
    switches (2), sideways invertibility (3, with uniqueness = strong), and
    the Yang-Baxter equations in right and left forms (4); plus the
    diagonal condition a^a = a_a separating biquandles from biracks.
    """
    m = b.m
    rng = range(m)
    report = {}

    def record(key, witness):
        if key not in report:
            report[key] = {"holds": witness is None, "witness": witness}

    # column bijectivity of all four tables
    bad = None
    for tname, table in zip(("up", "down", "up_bar", "down_bar"), b.tables()):
        for col in rng:
            if len({table[a][col] for a in rng}) != m:
                bad = (tname, col)
                break
        if bad:
            break
    record("columns_invertible", bad)

    # switch bijectivity
    images = {b.switch(a, c) for a in rng for c in rng}
    record("switch_bijective",
           None if len(images) == m * m else ("image size", len(images)))

    # axiom 2: S and S_bar are mutually inverse
    bad = None
    for a in rng:
        for c in rng:
            if b.switch_bar(*b.switch(a, c)) != (a, c):
                bad = ("sbar(s)", a, c)
                break
            if b.switch(*b.switch_bar(a, c)) != (a, c):
                bad = ("s(sbar)", a, c)
                break
        if bad:
            break
    record("axiom2_inverse_switch", bad)

    # axiom 4: Yang-Baxter, right operations
    up, down = b.up, b.down
    bad = None
    for a in rng:
        for c in rng:
            for e in rng:
                # a^{bc_b} = a^{cb^c}
                if up[up[a][c]][down[e][c]] != up[up[a][e]][up[c][e]]:
                    bad = ("eq1", a, c, e)
                    break
                # c_{ba^b} = c_{ab_a}
                if down[down[e][c]][up[a][c]] != down[down[e][a]][down[c][a]]:
                    bad = ("eq2", a, c, e)
                    break
                # (b_a)^{c_a} = (b^c)_{a^c}
                if up[down[c][a]][down[e][a]] != down[up[c][e]][up[a][e]]:
                    bad = ("eq3", a, c, e)
                    break
            if bad:
                break
        if bad:
            break
    record("axiom4_yang_baxter", bad)

    # axiom 4, left operations
    upb, downb = b.up_bar, b.down_bar
    bad = None
    for a in rng:
        for c in rng:
            for e in rng:
                if upb[upb[a][c]][downb[e][c]] != upb[upb[a][e]][upb[c][e]]:
                    bad = ("eq1-left", a, c, e)
                    break
                if (downb[downb[e][c]][upb[a][c]]
                        != downb[downb[e][a]][downb[c][a]]):
                    bad = ("eq2-left", a, c, e)
                    break
                if (upb[downb[c][a]][downb[e][a]]
                        != downb[upb[c][e]][upb[a][e]]):
                    bad = ("eq3-left", a, c, e)
                    break
            if bad:
                break
        if bad:
            break
    record("axiom4_left", bad)

    # axiom 1: kink conditions
    bad = None
    for a in rng:
        if not any(down[a][x] == x and up[x][a] == a for x in rng):
            bad = ("x", a)
            break
        if not any(upb[a][y] == y and downb[y][a] == a for y in rng):
            bad = ("y", a)
            break
    record("axiom1_kink", bad)

    # axiom 3: sideways existence / uniqueness
    exists_bad = None
    unique = True
    for a in rng:
        for c in rng:
            xy = [(x, y) for x in rng for y in rng
                  if down[x][c] == a and upb[y][a] == c
                  and up[c][x] == y and downb[a][y] == x]
            zt = [(z, t) for z in rng for t in rng
                  if up[t][a] == c and down[a][t] == z
                  and downb[z][c] == a and upb[c][z] == t]
            if not xy or not zt:
                exists_bad = (a, c)
            if len(xy) > 1 or len(zt) > 1:
                unique = False
        if exists_bad:
            break
    record("axiom3_sideways", exists_bad)
    report["axiom3_unique"] = {"holds": exists_bad is None and unique,
                               "witness": None}

    # biquandle condition a^a = a_a
    bad = None
    for a in rng:
        if up[a][a] != down[a][a]:
            bad = (a,)
            break
    record("biquandle_condition", bad)

    core = ["columns_invertible", "switch_bijective", "axiom2_inverse_switch",
            "axiom4_yang_baxter", "axiom4_left"]
    report["is_birack"] = all(report[k]["holds"] for k in core)
    report["is_biquandle"] = (report["is_birack"]
                              and report["axiom1_kink"]["holds"]
                              and report["axiom3_sideways"]["holds"]
                              and report["biquandle_condition"]["holds"])
    report["is_strong"] = (report["is_biquandle"]
                           and report["axiom3_unique"]["holds"])
    return report


class SwitchMap:
    """Pair-level view of a birack: the switch bijection on labels^2."""

    __slots__ = ("m", "mapping")

    def __init__(self, m, mapping):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mapping", dict(mapping))

    def __setattr__(self, name, value):
        raise AttributeError("SwitchMap is immutable")

    @classmethod
    def from_birack(cls, b):
        return cls(b.m, {(a, c): b.switch(a, c)
                         for a in b.labels() for c in b.labels()})

    def is_bijection(self):
        return len(set(self.mapping.values())) == self.m * self.m

    def satisfies_yang_baxter(self):
        """(S x 1)(1 x S)(S x 1) = (1 x S)(S x 1)(1 x S) on all triples."""
        s = self.mapping

        def s12(t):
            a, b = s[(t[0], t[1])]
            return (a, b, t[2])

        def s23(t):
            a, b = s[(t[1], t[2])]
            return (t[0], a, b)

        rng = range(self.m)
        for t in itertools.product(rng, rng, rng):
            if s12(s23(s12(t))) != s23(s12(s23(t))):
                return False
        return True

    def preserves_diagonal(self):
        """The sideways map G(a,b) = (b_a, a^b) fixes the diagonal setwise."""
        return all(self.mapping[(a, a)][0] == self.mapping[(a, a)][1]
                   for a in range(self.m))


def check_axioms_switchform(b):
    """Independent axiom checker in the switch-map formulation.

    Cross-validates check_axioms: a birack is a pair-bijection S whose
    inverse is the barred switch and which satisfies the set-theoretic
    Yang-Baxter equation (in both S and S^{-1} forms).
    """
    s = SwitchMap.from_birack(b)
    rng = range(b.m)
    ok_bij = s.is_bijection()
    ok_inv = ok_bij and all(
        b.switch_bar(*s.mapping[(a, c)]) == (a, c) for a in rng for c in rng)
    ok_yb = ok_bij and s.satisfies_yang_baxter()
    sbar = SwitchMap(b.m, {(a, c): b.switch_bar(a, c)
                           for a in rng for c in rng})
    ok_yb_left = sbar.is_bijection() and sbar.satisfies_yang_baxter()
    cols = all(len({t[a][col] for a in rng}) == b.m
               for t in b.tables() for col in rng)
    return {
        "is_birack": ok_bij and ok_inv and ok_yb and ok_yb_left and cols,
        "diagonal_preserved": ok_bij and s.preserves_diagonal(),
    }


# ---------------------------------------------------------------------------
# small-order enumeration

def _permute_birack(tables, perm):
    m = len(tables[0])
    inv = [0] * m
    for i, p in enumerate(perm):
        inv[p] = i
    out = []
    for t in tables:
        out.append(tuple(tuple(perm[t[inv[a]][inv[c]]] for c in range(m))
                         for a in range(m)))
    return tuple(out)


def canonical_key(b):
    """Lexicographically minimal table tuple over all label permutations."""
    best = None
    for perm in itertools.permutations(range(b.m)):
        cand = _permute_birack(b.tables(), perm)
        if best is None or cand < best:
            best = cand
    return best


def enumerate_biracks(m, predicate=None):
    """All biracks of order m up to label permutation (lazy stream).

    Columns of the up/down tables must be permutations, so the raw search
    space is (m!)^(2m); practical for m <= 3.  The barred tables carry no
    extra freedom (they are the inverse switch).
    """
    if m > 4:
        raise SizeCap("enumeration is only supported for m <= 4")
    if m == 4:
        raise SizeCap("order-4 enumeration exceeds the configured budget")
    perms = list(itertools.permutations(range(m)))
    seen = set()
    for up_cols in itertools.product(perms, repeat=m):
        up = tuple(tuple(up_cols[c][a] for c in range(m)) for a in range(m))
        for down_cols in itertools.product(perms, repeat=m):
            down = tuple(tuple(down_cols[c][a] for c in range(m))
                         for a in range(m))
            try:
                cand = FiniteBirack(up, down)
            except ValueError:
                continue
            if not cand.is_birack:
                continue
            if predicate is not None and not predicate(cand):
                continue
            key = canonical_key(cand)
            if key in seen:
                continue
            seen.add(key)
            yield FiniteBirack(*key)


def identity_birack(m):
    ident = tuple(tuple(a for _ in range(m)) for a in range(m))
    return FiniteBirack(ident, ident, name="identity-%d" % m)


def dihedral_quandle(m):
    """Dihedral quandle: a^b = 2b - a mod m, trivial lower operation."""
    up = tuple(tuple((2 * c - a) % m for c in range(m)) for a in range(m))
    ident = tuple(tuple(a for _ in range(m)) for a in range(m))
    return FiniteBirack(up, ident, name="R%d" % m)


# ---------------------------------------------------------------------------
# colorings

def _code_edges(code):
    """Diagram edges (arcs between consecutive tokens) and free components."""
    edges = []
    for ci, comp in enumerate(code.components):
        for ti in range(len(comp)):
            edges.append((ci, ti))
    free = sum(1 for comp in code.components if not comp)
    return edges, free


def _crossing_relations(code, b):
    """(a, b, c, d, positive?) edge 4-tuples per chord.

    a = incoming under edge, b = incoming over edge, c = outgoing under,
    d = outgoing over; the relation is c = a^b, d = b_a at positive
    crossings, and the barred forms at negative ones.
    """
    rels = []
    occ = code.occurrences()
    for chord in sorted(occ):
        (c1, t1, tok1), (c2, t2, tok2) = occ[chord]
        if tok1.passage == "O":
            (oc, ot), (uc, ut) = (c1, t1), (c2, t2)
        else:
            (oc, ot), (uc, ut) = (c2, t2), (c1, t1)
        ko = len(code.components[oc])
        ku = len(code.components[uc])
        a = (uc, (ut - 1) % ku)
        bb = (oc, (ot - 1) % ko)
        c = (uc, ut)
        d = (oc, ot)
        rels.append((a, bb, c, d, tok1.sign > 0))
    return rels


def colorings(code, b):
    """Number of label assignments to edges satisfying all crossing rules."""
    if code.kind != "classical":
        raise ValueError("colorings need a classical code")
    edges, free = _code_edges(code)
    rels = _crossing_relations(code, b)
    m = b.m
    count = _count_colorings(edges, rels, b)
    return count * (m ** free)


def _count_colorings(edges, rels, b):
    edge_ix = {e: i for i, e in enumerate(edges)}
    n_edges = len(edges)
    rels_ix = [(edge_ix[a], edge_ix[bb], edge_ix[c], edge_ix[d], pos)
               for a, bb, c, d, pos in rels]

    def propagate(values):
        """Forward-deduce outputs of relations whose inputs are known.

        Returns the list of indices it filled in, or None on conflict
        (rolling its own deductions back first).
        """
        touched = []
        progress = True
        while progress:
            progress = False
            for ai, bi, ci, di, pos in rels_ix:
                va, vb = values[ai], values[bi]
                if va is None or vb is None:
                    continue
                if pos:
                    vc, vd = b.up[va][vb], b.down[vb][va]
                else:
                    vc, vd = b.up_bar[va][vb], b.down_bar[vb][va]
                for ix, v in ((ci, vc), (di, vd)):
                    if values[ix] is None:
                        values[ix] = v
                        touched.append(ix)
                        progress = True
                    elif values[ix] != v:
                        for jx in touched:
                            values[jx] = None
                        return None
        return touched

    values = [None] * n_edges

    def backtrack():
        try:
            pick = values.index(None)
        except ValueError:
            return 1
        total = 0
        for v in range(b.m):
            values[pick] = v
            touched = propagate(values)
            if touched is not None:
                total += backtrack()
                for ix in touched:
                    values[ix] = None
            values[pick] = None
        return total

    if n_edges == 0:
        return 1
    return backtrack()


# ---------------------------------------------------------------------------
# involutory quandles

class InvolutoryQuandle:
    """One table ab with aa = a and (ab)b = a; crossing relation c = ab."""

    __slots__ = ("m", "table", "name")

    def __init__(self, table, name=None):
        table = _as_table(table)
        m = len(table)
        for a in range(m):
            if table[a][a] != a:
                raise ValueError("aa = a fails at %d" % a)
            for c in range(m):
                if table[table[a][c]][c] != a:
                    raise ValueError("(ab)b = a fails at (%d,%d)" % (a, c))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("InvolutoryQuandle is immutable")

    def __eq__(self, other):
        return (isinstance(other, InvolutoryQuandle)
                and self.table == other.table)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return "InvolutoryQuandle(m=%d%s)" % (
            self.m, ", name=%r" % self.name if self.name else "")


def dihedral_iq(m):
    return InvolutoryQuandle(
        tuple(tuple((2 * c - a) % m for c in range(m)) for a in range(m)),
        name="R%d" % m)


def enumerate_involutory_quandles(m):
    """All involutory quandle tables of order m (columns are involutions
    fixing the column index); not deduplicated by isomorphism."""
    def involutions_fixing(b):
        rest = [x for x in range(m) if x != b]

        def build(remaining, pairs):
            if not remaining:
                mapping = {b: b}
                for x, y in pairs:
                    mapping[x] = y
                    mapping[y] = x
                yield mapping
                return
            x = remaining[0]
            yield from build(remaining[1:], pairs + [(x, x)])
            for i in range(1, len(remaining)):
                y = remaining[i]
                rest2 = [z for z in remaining[1:] if z != y]
                yield from build(rest2, pairs + [(x, y)])

        yield from build(rest, [])

    cols = [list(involutions_fixing(b)) for b in range(m)]
    for combo in itertools.product(*cols):
        table = tuple(tuple(combo[c][a] for c in range(m)) for a in range(m))
        yield InvolutoryQuandle(table)


def iq_colorings(code, q):
    """Colorings cutting arcs at under-passages only, relation c = ab."""
    if code.kind != "classical":
        raise ValueError("iq colorings need a classical code")
    arcs = {}     # (comp, arc index within comp) -> id
    arc_at = {}   # token position -> arc id covering it
    arc_in = {}   # under-token position -> (incoming arc, outgoing arc)
    next_id = 0
    free = 0
    for ci, comp in enumerate(code.components):
        upos = [ti for ti, tok in enumerate(comp) if tok.passage == "U"]
        if not comp:
            free += 1
            continue
        if not upos:
            aid = next_id
            next_id += 1
            arcs[(ci, 0)] = aid
            for ti in range(len(comp)):
                arc_at[(ci, ti)] = aid
            continue
        ids = {}
        for j in range(len(upos)):
            ids[j] = next_id
            next_id += 1
        k = len(comp)
        for j, start in enumerate(upos):
            end = upos[(j + 1) % len(upos)]
            aid = ids[j]
            ti = start
            while True:
                ti = (ti + 1) % k
                arc_at[(ci, ti)] = aid
                if ti == end:
                    break
            arc_in[(ci, end)] = (aid, ids[(j + 1) % len(upos)])
        # over-tokens sitting on an arc are covered by arc_at above; the
        # token at an under-passage belongs to no arc interior
    rels = []
    occ = code.occurrences()
    for chord in sorted(occ):
        (c1, t1, tok1), (c2, t2, tok2) = occ[chord]
        if tok1.passage == "U":
            (uc, ut), (oc, ot) = (c1, t1), (c2, t2)
        else:
            (uc, ut), (oc, ot) = (c2, t2), (c1, t1)
        a_in, a_out = arc_in[(uc, ut)]
        over = arc_at[(oc, ot)]
        rels.append((a_in, over, a_out))
    n_arcs = next_id

    values = [None] * n_arcs

    def backtrack(ix):
        if ix == n_arcs:
            return 1
        total = 0
        for v in range(q.m):
            values[ix] = v
            ok = True
            for a, bb, c in rels:
                if (values[a] is not None and values[bb] is not None
                        and values[c] is not None
                        and q.table[values[a]][values[bb]] != values[c]):
                    ok = False
                    break
            if ok:
                total += backtrack(ix + 1)
        values[ix] = None
        return total

    count = backtrack(0) if n_arcs else 1
    return count * (q.m ** free)
