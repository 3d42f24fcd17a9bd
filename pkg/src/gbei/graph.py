"""Labeled simple graphs on ``1..n`` and their elementary invariants.

Vertices are 1-based. Internally every vertex set is also available as an
integer bitmask (bit ``v`` set for vertex ``v``) because the recognizers and
the cut-set enumeration are dominated by subset operations.
"""

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import DisconnectedInput, InvalidGraph


def bits(mask):
    """Yield the vertices whose bits are set in ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask):
    return bin(mask).count("1")


class SimpleGraph:
    """Immutable undirected simple graph on the vertex set ``1..n``."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 0:
            raise InvalidGraph(f"vertex count must be a non-negative integer, got {n!r}")
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidGraph(f"edge {{{u},{v}}} outside vertex range 1..{n}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
        adj = [0] * (n + 1)
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def complete(cls, n):
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def empty(cls, n):
        return cls(n)

    @classmethod
    def path(cls, n):
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise InvalidGraph("a cycle needs at least 3 vertices")
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @classmethod
    def from_adjacency_masks(cls, n, adj):
        return cls(n, ((u, v) for u in range(1, n + 1) for v in bits(adj[u]) if u < v))

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self):
        return range(1, self.n + 1)

    @property
    def vertex_mask(self):
        return ((1 << (self.n + 1)) - 1) ^ 1

    def adj_mask(self, v):
        return self._adj[v]

    def neighbors(self, v):
        return list(bits(self._adj[v]))

    def degree(self, v):
        return popcount(self._adj[v])

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def sorted_edges(self):
        return sorted(self.edges)

    def edge_count(self):
        return len(self.edges)

    def is_clique(self, mask):
        """True iff the vertices in ``mask`` are pairwise adjacent."""
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self._adj[v]:
                return False
        return True

    def is_complete(self):
        return self.is_clique(self.vertex_mask)

    def add_edges(self, new_edges):
        return SimpleGraph(self.n, list(self.edges) + list(new_edges))

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"

    # -- serialization ----------------------------------------------------

    def to_json(self):
        """Canonical JSON: edges sorted lexicographically, no whitespace variance."""
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.sorted_edges()]},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        if not isinstance(data, dict) or "n" not in data:
            raise InvalidGraph("graph JSON must be an object with keys 'n' and 'edges'")
        return cls(data["n"], [tuple(e) for e in data.get("edges", [])])

    def to_text(self):
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        rows = [r for r in rows if r]
        if not rows:
            raise InvalidGraph("empty graph text")
        try:
            n = int(rows[0])
            edges = []
            for r in rows[1:]:
                u, v = r.split()
                edges.append((int(u), int(v)))
        except ValueError as exc:
            raise InvalidGraph(f"malformed graph text: {exc}") from None
        return cls(n, edges)

    def to_dot(self, name="G"):
        out = [f"graph {name} {{"]
        out += [f"  {v};" for v in self.vertices]
        out += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        out.append("}")
        return "\n".join(out) + "\n"


def parse_graph(text):
    """Read either the JSON or the plain-text graph format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return SimpleGraph.from_json(text)
    return SimpleGraph.from_text(text)


# -- components and distances ---------------------------------------------

def component_masks(g, allowed=None):
    """Connected components of the subgraph induced on ``allowed`` (a mask)."""
    if allowed is None:
        allowed = g.vertex_mask
    out = []
    rest = allowed
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj_mask(v)
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def count_components(g, allowed=None):
    return len(component_masks(g, allowed))


def components(g):
    """Partition of ``1..n`` into components, ordered by minimum vertex."""
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g):
    return g.n >= 1 and len(component_masks(g)) == 1


def bfs_distances(g, source, allowed=None):
    if allowed is None:
        allowed = g.vertex_mask
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj_mask(u) & allowed):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g, component=None):
    """Largest BFS distance inside a connected vertex set (0 for one vertex)."""
    verts = sorted(g.vertices if component is None else component)
    if not verts:
        raise InvalidGraph("diameter of an empty vertex set")
    allowed = to_mask(verts)
    best = 0
    for s in verts:
        dist = bfs_distances(g, s, allowed)
        if len(dist) != len(verts):
            raise DisconnectedInput("diameter requested for a disconnected vertex set")
        best = max(best, max(dist.values()))
    return best


# -- free vertices ---------------------------------------------------------

def is_free_vertex(g, v):
    """True iff the neighbourhood of ``v`` induces a complete graph."""
    return g.is_clique(g.adj_mask(v))


def free_vertices(g):
    return [v for v in g.vertices if is_free_vertex(g, v)]


def non_free_vertices(g):
    return [v for v in g.vertices if not is_free_vertex(g, v)]


def is_disjoint_union_of_complete(g):
    return all(g.is_clique(c) for c in component_masks(g))


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    t: int
    component_diameters: tuple
    i: int
    d: int
    f: int
    iv: int
    kappa: int

    def as_dict(self):
        return {
            "n": self.n, "t": self.t, "componentDiameters": list(self.component_diameters),
            "i": self.i, "d": self.d, "f": self.f, "iv": self.iv, "kappa": self.kappa,
        }


def invariants(g):
    """Bundle the counts used by the depth bounds.

    ``d`` is the number of isolated vertices plus the sum of the component
    diameters. ``kappa`` is 0 for a disconnected graph and ``n - 1`` for a
    complete one.
    """
    from .connectivity import vertex_connectivity

    comps = component_masks(g)
    diams = tuple(diameter(g, list(bits(c))) for c in comps)
    isolated = sum(1 for v in g.vertices if g.adj_mask(v) == 0)
    f = len(free_vertices(g))
    if len(comps) == 1:
        kappa = vertex_connectivity(g).kappa
    else:
        kappa = 0
    return GraphInvariants(
        n=g.n, t=len(comps), component_diameters=diams, i=isolated,
        d=isolated + sum(diams), f=f, iv=g.n - f, kappa=kappa,
    )


# -- derived graphs ---------------------------------------------------------

def induced_subgraph(g, keep):
    """Induced subgraph on ``keep`` relabeled to ``1..|keep|``.

    Returns ``(subgraph, label_map)`` where ``label_map[i - 1]`` is the
    original label of new vertex ``i``.
    """
    kept = sorted(set(keep))
    new_label = {v: i + 1 for i, v in enumerate(kept)}
    edges = [(new_label[u], new_label[v]) for u, v in g.edges if u in new_label and v in new_label]
    return SimpleGraph(len(kept), edges), tuple(kept)


def delete_vertices(g, removed):
    removed = set(removed)
    return induced_subgraph(g, [v for v in g.vertices if v not in removed])


def relabel(g, perm):
    """Apply ``perm`` (a dict or sequence with ``perm[v]`` the new label)."""
    if not isinstance(perm, dict):
        perm = {v: perm[v - 1] for v in g.vertices}
    return SimpleGraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def disjoint_union(*graphs):
    edges = []
    offset = 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges]
        offset += h.n
    return SimpleGraph(offset, edges)


def component_subgraphs(g):
    """Each component as its own graph, with the label map back to ``g``."""
    return [induced_subgraph(g, c) for c in components(g)]
