"""Recognizers for the graph families with known depth formulas."""

from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .caps import check_cap, get_caps
from .completion import complete_at, is_in_h2
from .cutsets import enumerate_cutsets, is_accessible, is_unmixed
from .errors import CapExceeded, CompleteInput, DisconnectedInput
from .graph import (bits, count_components, delete_vertices,
                    is_connected, is_disjoint_union_of_complete, non_free_vertices,
                    popcount, to_mask)


# -- cliques and chordality ------------------------------------------------

def _bron_kerbosch(g, r, p, x, out):
    if not p and not x:
        out.append(r)
        return
    # pivot with the most neighbours in p
    pivot = max(bits(p | x), key=lambda u: popcount(p & g.adj_mask(u)))
    for v in bits(p & ~g.adj_mask(pivot)):
        nb = g.adj_mask(v)
        _bron_kerbosch(g, r | (1 << v), p & nb, x & nb, out)
        p &= ~(1 << v)
        x |= 1 << v


def maximal_clique_masks(g, cap=None):
    check_cap("maximal cliques", g.n, cap if cap is not None else get_caps().cliques)
    if g.n == 0:
        return []
    out = []
    _bron_kerbosch(g, 0, g.vertex_mask, 0, out)
    out.sort(key=lambda c: (-popcount(c), sorted(bits(c))))
    return out


def maximal_cliques(g, cap=None):
    """All maximal cliques, largest first, ties broken lexicographically."""
    return [frozenset(bits(c)) for c in maximal_clique_masks(g, cap)]


def mcs_order(g):
    """Maximum cardinality search; the reverse is a perfect elimination
    ordering exactly when ``g`` is chordal."""
    weight = {v: 0 for v in g.vertices}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        order.append(v)
        del weight[v]
        for u in g.neighbors(v):
            if u in weight:
                weight[u] += 1
    return order


def is_chordal(g):
    order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.get)
        rest = to_mask(earlier) & ~(1 << parent)
        if rest & ~g.adj_mask(parent):
            return False
    return True


def is_generalized_block_graph(g, cliques=None):
    if not is_chordal(g):
        return False
    cl = cliques if cliques is not None else maximal_clique_masks(g)
    k = len(cl)
    for i in range(k):
        for j in range(i + 1, k):
            ij = cl[i] & cl[j]
            if not ij:
                continue
            for l in range(j + 1, k):
                if ij & cl[l]:
                    if not (ij == cl[j] & cl[l] == cl[i] & cl[l]):
                        return False
    return True


def is_block_graph(g, cliques=None):
    cl = cliques if cliques is not None else maximal_clique_masks(g)
    if not is_generalized_block_graph(g, cl):
        return False
    return all(popcount(a & b) <= 1 for i, a in enumerate(cl) for b in cl[i + 1:])


# -- H1: maximal cliques pairwise meeting in one common clique ----------------

def is_in_h1(g) -> Optional[frozenset]:
    if not is_connected(g):
        raise DisconnectedInput("H1 membership is defined for connected graphs")
    if g.is_complete():
        raise CompleteInput("H1 consists of non-complete graphs")
    cl = maximal_clique_masks(g)
    common = cl[0] & cl[1]
    for i, a in enumerate(cl):
        for b in cl[i + 1:]:
            if a & b != common:
                return None
    if not common or not g.is_clique(common):
        return None
    return frozenset(bits(common))


# -- H3: alternating chains of triangles -------------------------------------

def triangle_chain(g) -> Optional[tuple]:
    """Order the maximal cliques as a chain of triangles whose consecutive
    intersections alternate edge, vertex, edge, ... (starting with an edge),
    with non-consecutive cliques disjoint and no vertex in three cliques.

    Returns the chain (any length >= 2) or None.
    """
    if g.n == 0 or not is_generalized_block_graph(g):
        return None
    cl = maximal_clique_masks(g)
    if len(cl) < 2 or any(popcount(c) != 3 for c in cl):
        return None
    k = len(cl)
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                if cl[i] & cl[j] & cl[l]:
                    return None

    def grow(chain, used):
        if len(chain) == k:
            return chain
        want = 2 if len(chain) % 2 == 1 else 1
        last = cl[chain[-1]]
        for idx in range(k):
            if idx in used or popcount(last & cl[idx]) != want:
                continue
            if any(cl[idx] & cl[p] for p in chain[:-1]):
                continue
            found = grow(chain + [idx], used | {idx})
            if found:
                return found
        return None

    for start in range(k):
        found = grow([start], {start})
        if found:
            return tuple(frozenset(bits(cl[i])) for i in found)
    return None


def is_in_h3(g) -> Optional[tuple]:
    """Chain witness when ``g`` is an alternating triangle chain with an even
    number ``2k`` of cliques; odd chains are not accepted."""
    chain = triangle_chain(g)
    if chain is None or len(chain) % 2:
        return None
    return chain


# -- strongly unmixed ----------------------------------------------------------

class _IsoMemo:
    """Memo keyed by isomorphism class: invariant-hash buckets, VF2 confirmation."""

    def __init__(self):
        self.buckets = {}

    @staticmethod
    def _nx(g):
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from(g.edges)
        return h

    def _key(self, h):
        return (h.number_of_nodes(), h.number_of_edges(),
                tuple(sorted(d for _, d in h.degree())),
                nx.weisfeiler_lehman_graph_hash(h, iterations=3))

    def get(self, g):
        h = self._nx(g)
        for other, value in self.buckets.get(self._key(h), ()):
            if nx.is_isomorphic(h, other):
                return value
        return None

    def put(self, g, value):
        h = self._nx(g)
        self.buckets.setdefault(self._key(h), []).append((h, value))

    def clear(self):
        self.buckets.clear()


_SU_MEMO = _IsoMemo()


def _cut_vertices(g):
    c = count_components(g)
    return [v for v in g.vertices if count_components(g, g.vertex_mask & ~(1 << v)) > c]


def _su_children(g, v):
    minus = delete_vertices(g, [v])[0]
    comp = complete_at(g, v)
    comp_minus = delete_vertices(comp, [v])[0]
    return minus, comp, comp_minus


def _iv(g):
    return len(non_free_vertices(g))


def _strongly_unmixed(g):
    if is_disjoint_union_of_complete(g):
        return True
    cached = _SU_MEMO.get(g)
    if cached is not None:
        return cached
    result = False
    if is_unmixed(g):
        iv = _iv(g)
        for v in _cut_vertices(g):
            children = _su_children(g, v)
            assert max(_iv(h) for h in children) < iv, "non-free vertex recursion must shrink iv"
            if all(_strongly_unmixed(h) for h in children):
                result = True
                break
    _SU_MEMO.put(g, result)
    return result


def is_strongly_unmixed(g, cap=None):
    """Every component complete, or unmixed with a cut vertex ``v`` such that
    ``G - v``, ``G_v`` and ``G_v - v`` are all strongly unmixed."""
    check_cap("strongly-unmixed recursion", g.n, cap if cap is not None else get_caps().strongly_unmixed)
    return _strongly_unmixed(g)


def strongly_unmixed_certificate(g, cap=None):
    """Recursion tree of chosen cut vertices, or None if not strongly unmixed.

    Vertex labels at each level refer to that level's graph (deleting ``v``
    relabels the survivors to ``1..n-1`` in increasing order).
    """
    if not is_strongly_unmixed(g, cap):
        return None
    if is_disjoint_union_of_complete(g):
        return {"leaf": "complete components"}
    for v in _cut_vertices(g):
        children = _su_children(g, v)
        if all(_strongly_unmixed(h) for h in children):
            minus, comp, comp_minus = (strongly_unmixed_certificate(h, cap) for h in children)
            return {"v": v, "minus": minus, "completed": comp, "completed_minus": comp_minus}
    raise AssertionError("memo says strongly unmixed but no cut vertex works")


# -- full report ----------------------------------------------------------------

@dataclass
class ClassReport:
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {"flags": self.flags, "witnesses": self.witnesses, "notes": self.notes}


def classify(g, with_certificates=True):
    """Evaluate every recognizer; a flag is None when its cap was exceeded."""
    rep = ClassReport()
    f, w = rep.flags, rep.witnesses
    connected = is_connected(g)
    f["connected"] = connected
    f["complete"] = connected and g.is_complete()
    f["disjointComplete"] = is_disjoint_union_of_complete(g)
    f["chordal"] = is_chordal(g)
    try:
        cl = maximal_clique_masks(g)
        w["maximalCliques"] = [sorted(bits(c)) for c in cl]
        f["generalizedBlock"] = is_generalized_block_graph(g, cl)
        f["block"] = is_block_graph(g, cl)
    except CapExceeded as exc:
        rep.notes.append(str(exc))
        f["generalizedBlock"] = f["block"] = None

    if connected and not f["complete"]:
        s = is_in_h1(g)
        f["H1"] = s is not None
        if s is not None:
            w["H1"] = sorted(s)
    else:
        f["H1"] = False

    try:
        h2 = is_in_h2(g)
        f["H2"] = h2 is not None
        if h2 is not None:
            w["H2"] = h2.as_dict()
    except CapExceeded as exc:
        rep.notes.append(str(exc))
        f["H2"] = None

    chain = triangle_chain(g)
    f["H3"] = chain is not None and len(chain) % 2 == 0
    if chain is not None:
        w["H3"] = {"chain": [sorted(c) for c in chain], "length": len(chain)}
        if len(chain) % 2:
            rep.notes.append("odd alternating triangle chain: not counted as H3")

    try:
        fam = enumerate_cutsets(g)
        f["unmixed"] = is_unmixed(g, fam)
        f["accessible"] = is_accessible(g, fam)
    except CapExceeded as exc:
        rep.notes.append(str(exc))
        f["unmixed"] = f["accessible"] = None

    try:
        f["stronglyUnmixed"] = is_strongly_unmixed(g)
        if f["stronglyUnmixed"] and with_certificates:
            w["stronglyUnmixed"] = strongly_unmixed_certificate(g)
    except CapExceeded as exc:
        rep.notes.append(str(exc))
        f["stronglyUnmixed"] = None
    return rep
