"""Vertex connectivity, by unit-capacity max-flow and by exhaustive search.

Complete graphs follow the convention ``kappa(K_n) = n - 1`` and carry no
separator witness.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .caps import check_cap, get_caps
from .errors import DisconnectedInput
from .graph import bits, component_masks, is_connected, to_mask


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness_separator: Optional[frozenset] = None


def _require_connected(g):
    if not is_connected(g):
        raise DisconnectedInput("vertex connectivity needs a connected graph")


def _disconnects(g, sep_mask):
    return len(component_masks(g, g.vertex_mask & ~sep_mask)) >= 2


def _smallest_separator(g, size):
    for sep in combinations(g.vertices, size):
        if _disconnects(g, to_mask(sep)):
            return frozenset(sep)
    raise AssertionError(f"no separator of size {size}")


def local_connectivity(g, s, t):
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Each vertex ``v`` is split into ``v_in -> v_out`` with capacity one;
    edges become pairs of arcs of unbounded capacity. Node ids: ``2v`` is
    ``v_in`` and ``2v + 1`` is ``v_out``.
    """
    big = g.n + 1
    cap = {}
    nbrs = {}

    def arc(a, b, c):
        cap[a, b] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)

    for v in g.vertices:
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in nbrs.get(a, ()):
                if b not in parent and cap[a, b] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[a, b] -= 1
            cap[b, a] += 1
            b = a
        flow += 1


def vertex_connectivity(g):
    """Exact vertex connectivity via Menger's theorem.

    The separator witness is the lexicographically smallest separator of
    minimum size.
    """
    _require_connected(g)
    if g.is_complete():
        return ConnectivityResult(g.n - 1, None)
    best = g.n
    for u in g.vertices:
        far = g.vertex_mask & ~g.adj_mask(u) & ~(1 << u)
        for v in bits(far):
            if v > u:
                best = min(best, local_connectivity(g, u, v))
    return ConnectivityResult(best, _smallest_separator(g, best))


def brute_force_connectivity(g, cap=None):
    """Smallest vertex set whose removal disconnects ``g``, by subset scan."""
    _require_connected(g)
    check_cap("brute-force connectivity", g.n, cap if cap is not None else get_caps().brute_connectivity)
    if g.is_complete():
        return ConnectivityResult(g.n - 1, None)
    for size in range(g.n - 1):
        for sep in combinations(g.vertices, size):
            if _disconnects(g, to_mask(sep)):
                return ConnectivityResult(size, frozenset(sep))
    raise AssertionError("non-complete connected graph without a separator")
