"""Neighbourhood completion ``G_v``, completion sets, and cycle completions.

``complete_at(g, v)`` turns the neighbourhood of ``v`` into a clique.
Iterating over a vertex set gives the same graph in every order, so
``complete_at_set`` always applies the vertices in ascending order.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .caps import check_cap, get_caps
from .graph import SimpleGraph, bits, is_disjoint_union_of_complete, is_connected


def complete_at(g, v):
    """``G_v``: same vertices, plus every edge between two neighbours of ``v``."""
    nb = g.neighbors(v)
    return g.add_edges(combinations(nb, 2))


def complete_in_order(g, order):
    for v in order:
        g = complete_at(g, v)
    return g


@dataclass(frozen=True)
class CompletionTrace:
    base: SimpleGraph
    applied: tuple
    result: SimpleGraph


def complete_at_set(g, W):
    order = tuple(sorted(set(W)))
    return CompletionTrace(g, order, complete_in_order(g, order))


def is_completion_set(g, W):
    return is_disjoint_union_of_complete(complete_at_set(g, W).result)


@dataclass(frozen=True)
class H2Witness:
    cycle: tuple  # vertices of a Hamiltonian cycle of g, in cyclic order
    W: frozenset

    def as_dict(self):
        return {"cycle": list(self.cycle), "W": sorted(self.W)}


def _is_cycle_graph(g):
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices)


def hamiltonian_cycles(g):
    """Hamiltonian cycles as vertex tuples starting at 1, lexicographic order.

    Each undirected cycle is produced once (second vertex < last vertex).
    """
    n = g.n
    if n < 3:
        return
    full = g.vertex_mask
    path = [1]

    def extend(visited):
        last = path[-1]
        if visited == full:
            if g.has_edge(last, 1) and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in bits(g.adj_mask(last) & ~visited):
            path.append(w)
            yield from extend(visited | (1 << w))
            path.pop()

    yield from extend(1 << 1)


def _cycle_on(n, order):
    return SimpleGraph(n, [(order[i], order[(i + 1) % n]) for i in range(n)])


def _completion_for_cycle(g, order):
    """A set W with (cycle on ``order``)_W == g, or None."""
    n = g.n
    pos = {v: i for i, v in enumerate(order)}
    # w can only be completed if its two cycle neighbours end up adjacent in g.
    cand = [w for w in order if g.has_edge(order[pos[w] - 1], order[(pos[w] + 1) % n])]
    target = g.edges
    base = _cycle_on(n, order)

    def search(i, current, chosen):
        if not current.edges <= target:
            return None
        if current.edges == target:
            return frozenset(chosen)
        if i == len(cand):
            return None
        found = search(i + 1, current, chosen)
        if found is not None:
            return found
        return search(i + 1, complete_at(current, cand[i]), chosen + [cand[i]])

    return search(0, base, [])


def is_in_h2(g, cap=None) -> Optional[H2Witness]:
    """Witness that ``g`` is a cycle or a completion of a cycle, up to relabeling.

    Searches Hamiltonian cycles of ``g`` in lexicographic order and, for
    each, a vertex set whose completion reproduces ``g``. Exponential; the
    vertex count is capped.
    """
    check_cap("H2 recognition", g.n, cap if cap is not None else get_caps().h2)
    if g.n < 3 or not is_connected(g):
        return None
    if _is_cycle_graph(g):
        return H2Witness(next(hamiltonian_cycles(g)), frozenset())
    for order in hamiltonian_cycles(g):
        W = _completion_for_cycle(g, order)
        if W is not None:
            return H2Witness(order, W)
    return None
