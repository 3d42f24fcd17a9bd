"""Named graphs: the five figures, standard families, and the constructed
members of the solved classes."""

import re

from .graph import SimpleGraph

FIGURES = {
    # two 4-cliques {1,2,3,4} and {1,3,4,5} meeting in the triangle {1,3,4}
    "fig1": SimpleGraph(5, [(1, 3), (3, 4), (1, 4), (1, 2), (2, 3), (2, 4), (3, 5), (1, 5), (4, 5)]),
    # the hexagon completed at 1, 2 and 4
    "fig2": SimpleGraph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6),
                            (2, 6), (1, 3), (3, 6), (3, 5)]),
    # six triangles in an alternating chain
    "fig3": SimpleGraph(10, [(1, 3), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6),
                             (5, 7), (6, 7), (7, 9), (7, 8), (8, 9), (9, 10), (8, 10)]),
    # two triangles sharing {2,3}, pendant 5 on 4
    "fig4": SimpleGraph(5, [(1, 3), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]),
    # triangle {1,2,3}, K4 on {2,3,4,5}, pendants 6 (on 4) and 7 (on 5)
    "fig5": SimpleGraph(7, [(1, 2), (1, 3), (2, 3), (2, 5), (2, 4), (3, 5), (3, 4),
                            (4, 5), (5, 7), (4, 6)]),
}

_FAMILY = re.compile(r"^(cycle|path|complete|empty)(\d+)$")


def h1_graph(s, petals):
    """Common clique on ``1..s`` joined to pairwise non-adjacent cliques of the
    given sizes; the maximal cliques are the common clique plus one petal."""
    if s < 1 or len(petals) < 2 or min(petals) < 1:
        raise ValueError("need s >= 1 and at least two non-empty petals")
    edges = [(u, v) for u in range(1, s + 1) for v in range(u + 1, s + 1)]
    nxt = s + 1
    for size in petals:
        block = list(range(nxt, nxt + size))
        edges += [(u, v) for i, u in enumerate(block) for v in block[i + 1:]]
        edges += [(u, v) for u in range(1, s + 1) for v in block]
        nxt += size
    return SimpleGraph(nxt - 1, edges)


def triangle_chain_graph(cliques):
    """Chain of ``cliques`` triangles, consecutive ones sharing an edge, then a
    vertex, alternately. Labeled like the six-triangle figure."""
    if cliques < 1:
        raise ValueError("need at least one triangle")
    tris = [(1, 2, 3)]
    nxt = 4
    for idx in range(1, cliques):
        a, b, c = tris[-1]
        if idx % 2 == 1:  # share the edge {b, c}
            tris.append((b, c, nxt))
            nxt += 1
        else:  # share the vertex c
            tris.append((c, nxt, nxt + 1))
            nxt += 2
    edges = {(min(u, v), max(u, v)) for t in tris for u in t for v in t if u != v}
    return SimpleGraph(nxt - 1, edges)


def get(name):
    """Look up a fixture: ``fig1``..``fig5``, ``cycleN``, ``pathN``, ``completeN``, ``emptyN``."""
    if name in FIGURES:
        return FIGURES[name]
    mt = _FAMILY.match(name)
    if not mt:
        raise KeyError(f"unknown fixture {name!r}")
    kind, n = mt.group(1), int(mt.group(2))
    return getattr(SimpleGraph, kind)(n)


def names():
    return sorted(FIGURES) + ["cycleN", "pathN", "completeN", "emptyN"]
