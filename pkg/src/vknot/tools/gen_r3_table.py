"""Generate the R3 legality table (data/r3_table.json) geometrically.

Model the third Reidemeister move on three straight strands:
    line 1:  y = h        (the strand that slides across)
    line 2:  y = x
    line 3:  y = -x
The move takes h = +1 to h = -1; both sides of the move are legal
configurations.  Enumerating all 2^3 strand directions and all 6 vertical
layer orders (which strand is over which, preserved by the move) yields
every oriented/signed R3 configuration.  For each, record the two-token
Gauss segments each strand reads off (crossing name, passage, sign); a
crossing's sign is the orientation sign det(d_over, d_under) of the two
direction vectors.

Run as:  python3 -m vknot.tools.gen_r3_table [outfile]
"""

import itertools
import json
import os
import sys

from vknot.moves import r3_canonical_key

_DIRS = {
    "1": (1, 0),
    "2": (1, 1),
    "3": (1, -1),
}
# crossing positions as functions of h: pair -> (x, y)
_CROSSING_X = {
    ("1", "2"): lambda h: h,    # y = h meets y = x at x = h
    ("1", "3"): lambda h: -h,   # y = h meets y = -x at x = -h
    ("2", "3"): lambda h: 0,    # y = x meets y = -x at the origin
}


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _configurations():
    configs = []
    for h in (1, -1):
        for flips in itertools.product((1, -1), repeat=3):
            dirs = {name: (f * d[0], f * d[1])
                    for (name, d), f in zip(sorted(_DIRS.items()), flips)}
            for layers in itertools.permutations("123"):
                height = {name: pos for pos, name in enumerate(layers)}
                segments = []
                for line in "123":
                    crossings = []
                    for pair, xfun in _CROSSING_X.items():
                        if line not in pair:
                            continue
                        other = pair[0] if pair[1] == line else pair[1]
                        x = xfun(h)
                        # traversal order: parameter along the direction
                        t = x * (1 if dirs[line][0] > 0 else -1)
                        over = height[line] > height[other]
                        o, u = (line, other) if over else (other, line)
                        sign = 1 if _det(dirs[o], dirs[u]) > 0 else -1
                        crossings.append(
                            (t, ("".join(sorted(pair)),
                                 "O" if over else "U", sign)))
                    crossings.sort()
                    segments.append(tuple(e for _, e in crossings))
                configs.append(segments)
    return configs


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    out = argv[0] if argv else os.path.join(
        os.path.dirname(__file__), os.pardir, "data", "r3_table.json")
    keys = sorted({r3_canonical_key(cfg) for cfg in _configurations()})
    payload = [[list(map(list, seg)) for seg in key] for key in keys]
    with open(out, "w") as fh:
        json.dump(payload, fh, indent=1)
    print("wrote %d canonical configurations to %s" % (len(keys), out))


if __name__ == "__main__":
    main()
