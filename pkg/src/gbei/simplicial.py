"""Stanley–Reisner complexes of squarefree monomial ideals and their
reduced simplicial homology over the rationals.

Faces and vertex subsets are bitmasks over the ground set ``0..N-1``.
Homology ranks come from boundary-matrix ranks: a GF(2) rank (bit-packed
rows, cheap) bounds the rational rank from below, so a vanishing GF(2)
Betti number proves the rational one vanishes; the rational rank itself
is computed by fraction-free integer elimination.
"""

from dataclasses import dataclass
from math import gcd

from .caps import check_cap, get_caps
from .errors import NotSquarefree
from .graph import bits, popcount


@dataclass(frozen=True)
class SimplicialComplex:
    ground_size: int
    minimal_nonfaces: tuple  # bitmasks, pairwise incomparable, sorted

    def is_face(self, mask):
        return not any(nf & mask == nf for nf in self.minimal_nonfaces)

    def nonfaces_through(self):
        out = [[] for _ in range(self.ground_size)]
        for nf in self.minimal_nonfaces:
            for v in bits(nf):
                out[v].append(nf)
        return out


def _minimalize(masks):
    out = []
    for m in sorted(set(masks), key=lambda x: (popcount(x), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return tuple(sorted(out))


def stanley_reisner(generators, ground_size=None):
    """Complex whose minimal non-faces are the supports of the generators."""
    gens = list(generators)
    if ground_size is None:
        if not gens:
            raise ValueError("ground_size required for an empty generator list")
        ground_size = len(gens[0])
    masks = []
    for exp in gens:
        if any(e > 1 for e in exp):
            raise NotSquarefree(f"monomial {tuple(exp)} is not squarefree")
        masks.append(sum(1 << i for i, e in enumerate(exp) if e))
    return SimplicialComplex(ground_size, _minimalize(masks))


def faces_by_dimension(cx, W, max_dim=None, through=None):
    """Faces of the induced subcomplex on ``W``: list indexed by ``dim + 1``."""
    through = through or cx.nonfaces_through()
    verts = list(bits(W))
    levels = [[0]]
    current = [0]
    dim = -1
    while current and (max_dim is None or dim < max_dim):
        nxt = []
        for face in current:
            top = face.bit_length() - 1
            for v in verts:
                if v <= top:
                    continue
                cand = face | (1 << v)
                if all(nf & cand != nf for nf in through[v]):
                    nxt.append(cand)
        dim += 1
        if not nxt:
            break
        levels.append(nxt)
        current = nxt
    return levels


def _boundary_rows(faces, lower):
    """Signed boundary rows of ``faces`` as {column: ±1} dicts."""
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for f in faces:
        row = {}
        sign = 1
        for v in bits(f):
            row[index[f & ~(1 << v)]] = sign
            sign = -sign
        rows.append(row)
    return rows


def rank_gf2(rows):
    pivots = {}
    rank = 0
    for row in rows:
        r = 0
        for c in row:
            r |= 1 << c
        while r:
            h = r.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = r
                rank += 1
                break
            r ^= p
    return rank


def rank_rational(rows):
    """Exact rank over Q; rows are {column: int}. Fraction-free elimination
    with content removal keeps entries integral and small."""
    pivots = {}
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = max(r)
            p = pivots.get(c)
            if p is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                pivots[c] = {k: v // g for k, v in r.items()}
                rank += 1
                break
            a, b = p[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            r = {k: v // g for k, v in new.items()} if g > 1 else new
    return rank


def _betti_from_levels(levels, dims, rank):
    """Reduced Betti numbers in ``dims`` from face levels (index = dim + 1)."""
    ranks = {}

    def bd_rank(d):
        # rank of the boundary map from dimension d to d - 1
        if d not in ranks:
            if d < 0 or d + 1 >= len(levels):
                ranks[d] = 0
            else:
                ranks[d] = rank(_boundary_rows(levels[d + 1], levels[d]))
        return ranks[d]

    out = {}
    for j in dims:
        if j + 1 >= len(levels):
            continue
        b = len(levels[j + 1]) - bd_rank(j) - bd_rank(j + 1)
        if b:
            out[j] = b
    return out


def reduced_homology_ranks(cx, W, max_dim=None, field="Q", cap=None):
    """Non-zero reduced Betti numbers ``{dim: rank}`` of the subcomplex on ``W``.

    ``max_dim`` limits the dimensions examined. ``field`` is ``"Q"`` or
    ``"GF2"``.
    """
    check_cap("homology subset", popcount(W), cap if cap is not None else get_caps().homology_subset)
    levels = faces_by_dimension(cx, W, None if max_dim is None else max_dim + 1)
    top = len(levels) - 2 if max_dim is None else max_dim
    rank = rank_rational if field == "Q" else rank_gf2
    return _betti_from_levels(levels, range(-1, top + 1), rank)


def euler_characteristic(levels):
    """Reduced Euler characteristic from face counts (the empty face counts)."""
    return sum((-1) ** (d - 1) * len(fs) for d, fs in enumerate(levels))


def lcm_lattice(cx):
    """Subsets ``W`` that are unions of minimal non-faces; for every other
    ``W`` the induced subcomplex is a cone and hence acyclic."""
    seen = set()
    frontier = set(cx.minimal_nonfaces)
    while frontier:
        seen |= frontier
        nxt = set()
        for a in frontier:
            for nf in cx.minimal_nonfaces:
                u = a | nf
                if u not in seen:
                    nxt.add(u)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class PdResult:
    pd: int
    subset: int  # maximizing W as a mask
    dim: int  # the homology dimension j attaining it
    subsets_examined: int


def projective_dimension(cx, cap=None):
    """``pd(S/I)`` as the max of ``|W| - 1 - j`` over subsets ``W`` with
    non-zero reduced homology of the induced subcomplex in dimension ``j``.

    Only unions of minimal non-faces are scanned, largest first. A subset
    of size ``s`` can contribute at most ``s`` (homology in dimension -1,
    when no vertex of ``W`` is a face), so the scan stops once that cannot
    beat the current maximum, and only dimensions that could improve it
    are examined.
    """
    check_cap("projective dimension ground set", cx.ground_size,
              cap if cap is not None else get_caps().oracle_vars)
    # W = ∅ has reduced homology in dimension -1 and contributes 0.
    best = PdResult(0, 0, -1, 0)
    if not cx.minimal_nonfaces:
        return best
    through = cx.nonfaces_through()
    candidates = sorted(lcm_lattice(cx), key=lambda w: (-popcount(w), w))
    examined = 0
    for W in candidates:
        s = popcount(W)
        if s <= best.pd:
            break
        examined += 1
        top = s - 2 - best.pd  # dimensions j <= top can improve the max
        levels = faces_by_dimension(cx, W, top + 1, through)
        screen = _betti_from_levels(levels, range(-1, top + 1), rank_gf2)
        for j in sorted(screen):
            if _betti_from_levels(levels, [j], rank_rational):
                best = PdResult(s - 1 - j, W, j, examined)
                break
    return PdResult(best.pd, best.subset, best.dim, examined)


def projective_dimension_bruteforce(cx):
    """Reference scan: every subset, full rational homology. Tiny inputs only."""
    best = (0, 0, -1)
    for W in range(1, 1 << cx.ground_size):
        for j in reduced_homology_ranks(cx, W, cap=cx.ground_size):
            val = popcount(W) - 1 - j
            if val > best[0]:
                best = (val, W, j)
    return PdResult(best[0], best[1], best[2], (1 << cx.ground_size) - 1)
