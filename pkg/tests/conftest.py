import random

import pytest

from vknot.gausscodes import GaussCode


def make_random_code(rng, n, components=1, kind="classical"):
    """Random valid code with n chords spread over the given number of
    components (some components may come out empty)."""
    slots = 2 * n
    comp_of = [rng.randrange(components) for _ in range(slots)]
    order = list(range(slots))
    rng.shuffle(order)
    comps = [[] for _ in range(components)]
    placed = {}
    for chord, (i, j) in enumerate(zip(order[0::2], order[1::2]), start=1):
        sign = rng.choice((1, -1))
        first = rng.choice(("O", "U"))
        second = "U" if first == "O" else "O"
        placed[i] = (chord, first, sign)
        placed[j] = (chord, second, sign)
    for slot in range(slots):
        comps[comp_of[slot]].append(placed[slot])
    if kind == "flat":
        comps = [[(c, None, s) for c, _, s in comp] for comp in comps]
    elif kind == "free":
        comps = [[(c, None, None) for c, _, _ in comp] for comp in comps]
    return GaussCode(comps, kind)


@pytest.fixture
def rng():
    return random.Random(20230817)
