"""Built-in example catalog.

The classical and virtual example knots ship as Gauss codes in
``data/catalog.txt`` (one ``name: gauss-code`` entry per line).  The flat
two-component link ``flatH`` is stored as a planar-diagram file instead,
because its distinguishing invariant -- the mod-2 count of virtual
crossings between its two components -- lives at the diagram level and is
invisible to a Gauss code.

Entry provenance, in brief: ``trefoil``, ``vtrefoil``, and ``unknot`` are
the standard small examples; ``figure8`` is the closure of the braid word
``s1 S2 s1 S2``; ``kishino`` and ``fig8K`` are the two connected sums of a
pair of trivial two-crossing tangles (``kishinoL``/``kishinoR``), pinned by
exhaustive search over such composites on their invariant fingerprints
(see tools/find_catalog.py):  ``kishino`` has f = 1, vanishing generalized
Alexander polynomial, trivial Alexander module, quaternionic Study
determinant 0 and codimension-1 gcd 2 + 5t^2 + 2t^4; ``fig8K`` shares
f = 1 and G = 0 but has Alexander codimension-1 gcd 1 - s - s*t, a unit
multiple of s^-1 - t - 1.
"""

from collections import OrderedDict, namedtuple
from importlib import resources

from .errors import UnknownCatalogName
from .gausscodes import parse_gauss
from .planar import PlanarDiagram, read_code

CatalogEntry = namedtuple("CatalogEntry", ["name", "code", "diagram", "note"])

_NOTES = {
    "unknot": "empty code; every invariant takes its trivial value",
    "trefoil": "alternating classical (3,2) torus knot",
    "figure8": "alternating classical knot, closure of the braid s1 S2 s1 S2",
    "vtrefoil": "virtual trefoil: smallest nonclassical knot, carrier genus 1",
    "kishino": "connected sum of two trivial tangles; f = 1 and G = 0, but "
               "Study determinant 0 with quaternionic codim-1 gcd "
               "2 + 5t^2 + 2t^4",
    "kishinoL": "left half of kishino; closes to a trivial knot",
    "kishinoR": "right half of kishino; closes to a trivial knot",
    "fig8K": "connected sum of a trivial tangle with itself; f = 1 and "
             "G = 0, but the Alexander codim-1 gcd is a unit multiple of "
             "s^-1 - t - 1",
    "flatH": "flat 2-component link with an odd number of virtual "
             "crossings between its components (diagram-level entry)",
}

_cache = None


def _load():
    global _cache
    if _cache is not None:
        return _cache
    entries = OrderedDict()
    text = resources.files("vknot.data").joinpath("catalog.txt").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, body = line.partition(":")
        name = name.strip()
        code = parse_gauss(body.strip())
        entries[name] = CatalogEntry(name, code, None, _NOTES.get(name, ""))
    flat_text = resources.files("vknot.data").joinpath("flat_h.json").read_text()
    diagram = PlanarDiagram.loads(flat_text)
    entries["flatH"] = CatalogEntry("flatH", read_code(diagram), diagram,
                                    _NOTES["flatH"])
    _cache = entries
    return entries


def catalog_names():
    return list(_load())


def catalog_entries():
    return list(_load().values())


def get_entry(name):
    try:
        return _load()[name]
    except KeyError:
        raise UnknownCatalogName("no catalog entry named %r" % name) from None


def get_code(name):
    return get_entry(name).code
