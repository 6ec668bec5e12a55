"""Small hand-built categories shared across test modules."""

from fatcat import cyclic, make_category


def indiscrete_z2_groupoid():
    """Two objects, two parallel isos in each direction, vertex groups Z2.

    Arrows are (x, y, g) with g in Z2; composition multiplies the group
    parts.
    """
    G = cyclic(2)
    arrows = []
    ids = {}
    for x in range(2):
        for y in range(2):
            for g in range(2):
                ids[(x, y, g)] = len(arrows)
                arrows.append((x, y, f"{x}->{y}:{g}"))
    comp = {}
    for (x, y, g), i in ids.items():
        for (yy, z, h), j in ids.items():
            if yy == y:
                comp[(j, i)] = ids[(x, z, G.mul[h][g])]
    identities = [ids[(x, x, 0)] for x in range(2)]
    return make_category(2, arrows, comp, identities)


def idempotent_monoid_category():
    """One object, arrows {id, e} with e.e = e; e has no inverse."""
    comp = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    return make_category(1, [(0, 0, "id"), (0, 0, "e")], comp, [0])


def discrete_category(n):
    return make_category(
        n, [(x, x, None) for x in range(n)], {(x, x): x for x in range(n)}, list(range(n))
    )
