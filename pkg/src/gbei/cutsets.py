"""Cut sets (sets with the cut point property), unmixedness and accessibility."""

from dataclasses import dataclass
from itertools import combinations

from .caps import check_cap, get_caps
from .errors import NotACutset
from .graph import bits, component_masks, count_components, is_free_vertex, to_mask


def _is_cut_vertex_within(g, allowed, v):
    """Is ``v`` a cut vertex of the subgraph induced on ``allowed`` (which contains v)?"""
    return count_components(g, allowed & ~(1 << v)) > count_components(g, allowed)


def _has_cut_point_property_mask(g, tmask):
    rest = g.vertex_mask & ~tmask
    for v in bits(tmask):
        if not _is_cut_vertex_within(g, rest | (1 << v), v):
            return False
    return True


def has_cut_point_property(g, T):
    """True iff every ``v`` in ``T`` is a cut vertex of ``G - (T - {v})``."""
    return _has_cut_point_property_mask(g, to_mask(T))


@dataclass(frozen=True)
class CutsetFamily:
    graph: object
    cutsets: tuple  # of (frozenset T, int c_G(T)), in (size, lexicographic) order
    includes_empty: bool = True

    def sets(self):
        return [T for T, _ in self.cutsets]

    def __contains__(self, T):
        return frozenset(T) in {S for S, _ in self.cutsets}

    def __len__(self):
        return len(self.cutsets)

    def to_json_obj(self):
        return [{"T": sorted(T), "c": c} for T, c in self.cutsets]


def _check(g, cap):
    check_cap("cut-set enumeration", g.n, cap if cap is not None else get_caps().cutsets)


def enumerate_cutsets(g, cap=None):
    """All cut sets of ``g`` with their component counts.

    A free vertex is never a cut vertex of an induced subgraph containing
    it, so only subsets of the non-free vertices are scanned.
    """
    _check(g, cap)
    candidates = [v for v in g.vertices if not is_free_vertex(g, v)]
    found = []
    for size in range(len(candidates) + 1):
        for T in combinations(candidates, size):
            tmask = to_mask(T)
            if _has_cut_point_property_mask(g, tmask):
                found.append((frozenset(T), count_components(g, g.vertex_mask & ~tmask)))
    return CutsetFamily(g, tuple(found))


def enumerate_cutsets_bruteforce(g, cap=None):
    """Reference path: scan every subset of ``1..n``."""
    _check(g, cap)
    found = []
    for size in range(g.n + 1):
        for T in combinations(g.vertices, size):
            tmask = to_mask(T)
            if _has_cut_point_property_mask(g, tmask):
                found.append((frozenset(T), count_components(g, g.vertex_mask & ~tmask)))
    return CutsetFamily(g, tuple(found))


def is_unmixed(g, family=None):
    """``c_G(T) = |T| + c`` for every cut set, ``c`` the number of components."""
    family = family or enumerate_cutsets(g)
    c = count_components(g)
    return all(cT == len(T) + c for T, cT in family.cutsets)


def is_accessible(g, family=None):
    family = family or enumerate_cutsets(g)
    if not is_unmixed(g, family):
        return False
    members = set(family.sets())
    for T in members:
        if T and not any(T - {v} in members for v in T):
            return False
    return True


def prime_component_support(g, T):
    """Vertex sets of the components of ``G - T`` (original labels)."""
    tmask = to_mask(T)
    if not _has_cut_point_property_mask(g, tmask):
        raise NotACutset(f"{sorted(T)} does not have the cut point property")
    return [frozenset(bits(c)) for c in component_masks(g, g.vertex_mask & ~tmask)]
