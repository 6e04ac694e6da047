"""Command-line front end: batch invariant reports as JSON.

Subcommands: invariants, distinguish, catalog, homology, braid, simplify,
flat-linking.  Reports go to standard output as JSON (sorted keys, so
identical inputs give byte-identical output); diagnostics go to standard
error.  Exit codes: 0 success, 2 parse/validation error, 3 resource cap.
"""

import argparse
import json
import sys

from . import __version__
from .alexander import (elementary_ideal_gcd, generalized_alexander,
                        relation_matrix)
from .biracks import (colorings, dihedral_quandle, identity_birack,
                      parse_birack)
from .braids import close_braid, format_braid, parse_braid, verify_presentation
from .catalog import catalog_entries, get_entry
from .errors import SizeCap, UnknownCatalogName, VknotError
from .gausscodes import carrier_genus, parse_gauss, serialize
from .homology import homology
from .moves import descriptor_to_json, simplify
from .planar import PlanarDiagram, diagram_stats, flat_linking_parity
from .quaternion import codim1_gcd, quaternionic_relations, study_det
from .statesum import atom_profile, bracket, f_polynomial, span_bound_check

# named biracks available to --birack / coloring reports
_NAMED_BIRACKS = {
    "R3": lambda: dihedral_quandle(3),
    "R5": lambda: dihedral_quandle(5),
    "identity-2": lambda: identity_birack(2),
    "identity-3": lambda: identity_birack(3),
}


def _resolve_code(text):
    """A Gauss code literal, or the code of a catalog entry by name."""
    try:
        return get_entry(text).code
    except UnknownCatalogName:
        return parse_gauss(text)


def _resolve_birack(text):
    if text in _NAMED_BIRACKS:
        return _NAMED_BIRACKS[text]()
    return parse_birack(text)


def _report(payload):
    payload["version"] = __version__
    json.dump(payload, sys.stdout, sort_keys=True, indent=1, default=str)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# invariants

_INVARIANT_FLAGS = ("bracket", "f", "atom", "galex", "alex", "quat",
                    "colorings")


def _compute_invariants(code, wanted):
    out = {}
    if "bracket" in wanted:
        b = bracket(code)
        out["bracket"] = str(b)
        out["bracket_span"] = b.span()
    if "f" in wanted:
        out["f"] = str(f_polynomial(code))
    if "atom" in wanted:
        prof = atom_profile(code)
        out["atom"] = prof.to_json()
        out["genus"] = float(carrier_genus(code))
        span, bound, ok = span_bound_check(code)
        out["span_bound"] = {"span": span, "bound": bound, "holds": ok}
    # crossing-free codes have an empty presentation matrix: the module is
    # free, so the Alexander polynomial is 0 and every smaller ideal is (1)
    if "galex" in wanted:
        out["galex"] = "0" if code.n == 0 else str(generalized_alexander(code))
    if "alex" in wanted:
        out["alex_codim1"] = ("1" if code.n == 0 else
                              str(elementary_ideal_gcd(relation_matrix(code), 1)))
    if "quat" in wanted:
        if code.n == 0:
            out["study_det"] = "1"
            out["quat_codim1"] = "1"
        else:
            m = quaternionic_relations(code)
            out["study_det"] = str(study_det(m))
            out["quat_codim1"] = str(codim1_gcd(m))
    if "colorings" in wanted:
        out["colorings"] = {name: colorings(code, make())
                            for name, make in sorted(_NAMED_BIRACKS.items())}
    return out


def cmd_invariants(args):
    code = _resolve_code(args.input)
    wanted = [fl for fl in _INVARIANT_FLAGS if getattr(args, fl)]
    if args.all or not wanted:
        wanted = list(_INVARIANT_FLAGS)
    if code.kind != "classical":
        raise VknotError("invariant reports need a classical code; "
                         "got a %s code" % code.kind)
    _report({"input": serialize(code),
             "results": _compute_invariants(code, wanted)})


# ---------------------------------------------------------------------------
# distinguish

def _distinguish_battery(code):
    """Invariant battery in fixed order; every entry is a knot/link
    invariant (no diagram-dependent quantities)."""
    yield "f", str(f_polynomial(code))
    yield "galex", ("0" if code.n == 0
                    else str(generalized_alexander(code).canonical()))
    for name, make in sorted(_NAMED_BIRACKS.items()):
        yield "colorings:%s" % name, colorings(code, make())
    m = quaternionic_relations(code) if code.n else None
    yield "study_det_vanishes", (True if m is None
                                 else str(study_det(m)) == "0")
    yield "quat_codim1", ("1" if m is None else str(codim1_gcd(m)))


def cmd_distinguish(args):
    a = _resolve_code(args.a)
    b = _resolve_code(args.b)
    if a.kind != "classical" or b.kind != "classical":
        raise VknotError("distinguish needs classical codes")
    verdict = "INCONCLUSIVE"
    witness = None
    for (name, va), (_, vb) in zip(_distinguish_battery(a),
                                   _distinguish_battery(b)):
        if va != vb:
            verdict, witness = "DISTINCT", {
                "invariant": name, "a": va, "b": vb}
            break
    _report({"input": {"a": serialize(a), "b": serialize(b)},
             "verdict": verdict, "witness": witness})


# ---------------------------------------------------------------------------
# remaining subcommands

def cmd_catalog(args):
    entries = []
    for e in catalog_entries():
        row = {"name": e.name, "code": serialize(e.code),
               "kind": e.code.kind, "note": e.note}
        if e.diagram is not None:
            row["diagram"] = e.diagram.to_json()
        entries.append(row)
    _report({"entries": entries})


def cmd_homology(args):
    b = _resolve_birack(args.birack)
    variant = {"rack": "full", "quandle": "quotient"}.get(args.variant,
                                                          args.variant)
    free, torsion = homology(b, args.degree, variant=variant)
    _report({"input": {"birack": args.birack, "degree": args.degree,
                       "variant": variant},
             "free_rank": free, "torsion": torsion})


def cmd_braid(args):
    word = parse_braid(args.word, args.n)
    out = {"word": format_braid(word), "strands": word.n}
    if args.verify:
        out["relations"] = verify_presentation(word.n)
    if args.close or args.invariants:
        code = close_braid(word)
        out["closure"] = serialize(code)
        out["closure_components"] = code.component_count
        if args.invariants:
            if code.component_count == 1:
                out["invariants"] = _compute_invariants(
                    code, ("bracket", "f", "atom", "galex"))
            else:
                out["invariants"] = _compute_invariants(code, ("bracket", "f"))
    _report(out)


def cmd_simplify(args):
    code = _resolve_code(args.input)
    reduced, certificate = simplify(code, budget=args.budget)
    _report({"input": serialize(code), "output": serialize(reduced),
             "chords": reduced.n,
             "certificate": [descriptor_to_json(m) for m in certificate]})


def cmd_flat_linking(args):
    try:
        entry = get_entry(args.input)
        if entry.diagram is None:
            raise VknotError("catalog entry %r has no diagram" % args.input)
        diagram = entry.diagram
    except UnknownCatalogName:
        with open(args.input) as fh:
            diagram = PlanarDiagram.loads(fh.read())
    stats = diagram_stats(diagram)
    _report({"input": args.input, "stats": stats.to_json(),
             "flat_linking_parity": flat_linking_parity(diagram)})


# ---------------------------------------------------------------------------

def _build_parser():
    top = argparse.ArgumentParser(
        prog="vknot", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant report for one code")
    p.add_argument("input", help="Gauss code or catalog name")
    p.add_argument("--all", action="store_true",
                   help="compute every invariant (default if no flag given)")
    for fl in _INVARIANT_FLAGS:
        p.add_argument("--%s" % fl, action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("distinguish", help="try to tell two codes apart")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("catalog", help="list the built-in examples")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("homology", help="birack cubical homology")
    p.add_argument("--birack", required=True,
                   help="named birack (%s) or a table literal"
                   % ", ".join(sorted(_NAMED_BIRACKS)))
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--variant", default="full",
                   choices=["full", "quotient", "rack", "quandle"])
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("braid", help="virtual braid words and closures")
    p.add_argument("--word", required=True,
                   help="letters s<i> (positive), S<i> (negative), r<i> "
                        "(virtual)")
    p.add_argument("--n", type=int, default=None, help="strand count")
    p.add_argument("--close", action="store_true")
    p.add_argument("--invariants", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="check the defining relations of the representation")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("simplify", help="greedy/backtracking move reduction")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=6)
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("flat-linking",
                       help="mod-2 inter-component virtual crossing count "
                            "of a diagram file or catalog entry")
    p.add_argument("input", help="catalog name or diagram JSON file path")
    p.set_defaults(func=cmd_flat_linking)
    return top


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        args.func(args)
    except SizeCap as exc:
        print("resource cap: %s" % exc, file=sys.stderr)
        return 3
    except (VknotError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
