"""Depth bounds and closed-form depths for ``S/J_{K_m,G}``.

Lower bound: ``(m - 2) t + f(G) + d(G)``. Upper bound for connected
non-complete ``G``: ``m + n - kappa(G)``. Closed forms are tried in a fixed
order; when several recognizers fire their values must agree.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

from .caps import get_caps
from .classes import is_block_graph, is_in_h1, is_in_h3, is_strongly_unmixed
from .completion import complete_at, is_in_h2
from .connectivity import vertex_connectivity
from .errors import CapExceeded, CompleteInput, DisconnectedInput, GBEIError, GBTimeout, NotSquarefree
from .graph import (component_subgraphs, delete_vertices, invariants, is_connected,
                    is_disjoint_union_of_complete, non_free_vertices)

SOURCES = ("DisjointComplete", "BlockGraph", "StronglyUnmixed", "H1", "H2", "H3", "Oracle", "None")


class FormulaConflict(GBEIError):
    """Two applicable closed forms, or a closed form and the oracle, disagree."""


def _check_m(m):
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")


def lower_bound(m, g):
    _check_m(m)
    inv = invariants(g)
    return (m - 2) * inv.t + inv.f + inv.d


def upper_bound(m, g):
    _check_m(m)
    if not is_connected(g):
        raise DisconnectedInput("the upper bound is stated for connected graphs")
    if g.is_complete():
        raise CompleteInput("the upper bound is stated for non-complete graphs")
    return m + g.n - vertex_connectivity(g).kappa


@dataclass(frozen=True)
class ExactDepth:
    value: int
    source: str
    agreeing: tuple = ()  # every source that fired


def _closed_forms_connected(m, g):
    """(source, value) for every closed form that applies to connected ``g``."""
    n = g.n
    out = []
    if g.is_complete():
        out.append(("DisjointComplete", m + n - 1))
    if is_block_graph(g):
        out.append(("BlockGraph", m + n - 1))
    try:
        if is_strongly_unmixed(g):
            out.append(("StronglyUnmixed", m + n - 1))
    except CapExceeded:
        pass
    if not g.is_complete():
        if is_in_h1(g) is not None:
            out.append(("H1", m + n - vertex_connectivity(g).kappa))
        try:
            if is_in_h2(g) is not None:
                out.append(("H2", m + n - 2))
        except CapExceeded:
            pass
    chain = is_in_h3(g)
    if chain is not None:
        out.append(("H3", len(chain) + m))
    return out


def _agree(forms):
    values = {v for _, v in forms}
    if len(values) > 1:
        raise FormulaConflict(f"closed forms disagree: {forms}")
    return ExactDepth(forms[0][1], forms[0][0], tuple(s for s, _ in forms))


def exact_depth(m, g) -> Optional[ExactDepth]:
    """Depth from the first applicable closed form, or None.

    Disconnected graphs: a disjoint union of complete graphs or a strongly
    unmixed graph is handled directly; otherwise the component depths are
    summed when every component has a closed form, and the reported source
    is the latest rule (in dispatch order) any component needed.
    """
    _check_m(m)
    if g.n == 0:
        return None
    if is_disjoint_union_of_complete(g):
        t = len(component_subgraphs(g))
        return ExactDepth((m - 1) * t + g.n, "DisjointComplete", ("DisjointComplete",))
    if is_connected(g):
        forms = _closed_forms_connected(m, g)
        return _agree(forms) if forms else None
    try:
        if is_strongly_unmixed(g):
            t = len(component_subgraphs(g))
            return ExactDepth((m - 1) * t + g.n, "StronglyUnmixed", ("StronglyUnmixed",))
    except CapExceeded:
        pass
    total, worst = 0, 0
    for comp, _ in component_subgraphs(g):
        e = exact_depth(m, comp)
        if e is None:
            return None
        total += e.value
        worst = max(worst, SOURCES.index(e.source))
    return ExactDepth(total, SOURCES[worst], (SOURCES[worst],))


@dataclass
class DepthReport:
    m: int
    n: int
    lower: int
    upper: Optional[int]
    exact: Optional[int]
    exact_source: str
    gap_notes: str
    oracle: Optional[dict] = None

    def as_dict(self):
        return {
            "m": self.m, "n": self.n, "lower": self.lower, "upper": self.upper,
            "exact": self.exact, "exactSource": self.exact_source,
            "gapNotes": self.gap_notes, "oracle": self.oracle,
        }


def _upper_sum(m, g):
    """Sum of per-component upper bounds, using the exact value for complete
    components; None when every component is complete."""
    total = 0
    any_noncomplete = False
    for comp, _ in component_subgraphs(g):
        if comp.is_complete():
            total += m + comp.n - 1
        else:
            any_noncomplete = True
            total += upper_bound(m, comp)
    return total if any_noncomplete else None


def _gap_notes(lower, upper, exact):
    notes = []
    if upper is not None:
        notes.append(f"upper - lower = {upper - lower}")
    if exact is not None:
        if exact == lower:
            notes.append("lower bound tight")
        if upper is not None and exact == upper:
            notes.append("upper bound tight")
        if exact != lower and (upper is None or exact != upper):
            notes.append("exact strictly between the bounds" if upper is not None
                         else "exact above lower bound")
    return "; ".join(notes)


def report(m, g, oracle=False, order=None, caps=None):
    """Assemble bounds, closed form and (optionally) the oracle value.

    ``oracle`` is False, True (always run it, cross-checking any closed
    form), or ``"auto"``: run it only when no closed form applies, and
    quietly leave ``exact`` empty if the instance is over the caps.
    """
    _check_m(m)
    lower = lower_bound(m, g)
    upper = _upper_sum(m, g) if g.n else None
    ex = exact_depth(m, g)
    exact = ex.value if ex else None
    source = ex.source if ex else "None"
    cert = None
    if oracle == "auto":
        caps = caps or get_caps()
        oracle = exact is None and 0 < m * g.n <= caps.oracle_vars
        if oracle:
            try:
                return report(m, g, True, order, caps)
            except (CapExceeded, GBTimeout, NotSquarefree):
                oracle = False
    if oracle:
        from .oracle import depth_oracle
        c = depth_oracle(m, g, order=order, caps=caps)
        cert = c.as_dict()
        if exact is None:
            exact, source = c.depth, "Oracle"
        elif exact != c.depth:
            raise FormulaConflict(f"closed form {source} gives {exact}, oracle gives {c.depth}")
    return DepthReport(m, g.n, lower, upper, exact, source, _gap_notes(lower, upper, exact), cert)


# -- d-compatible maps ------------------------------------------------------------

DCompatibleMap = Callable[[int, object], int]


def psi(m, g):
    """The shipped d-compatible map ``(m - 2) t + f(G) + d(G)``."""
    return lower_bound(m, g)


@dataclass
class DCompatibilityCheck:
    ok: bool
    violations: list = field(default_factory=list)


def check_d_compatible(fn, m, graphs):
    """Test the defining conditions of a d-compatible map on finitely many graphs.

    Disjoint unions of complete graphs need ``fn <= (m - 1) t + n``; every
    other graph needs some non-free ``v`` with ``fn(G - v) >= fn(G)``,
    ``fn(G_v) >= fn(G)`` and ``fn(G_v - v) >= fn(G) - 1``.
    """
    violations = []
    for g in graphs:
        value = fn(m, g)
        if is_disjoint_union_of_complete(g):
            t = len(component_subgraphs(g))
            if value > (m - 1) * t + g.n:
                violations.append((g, "condition (1)"))
            continue
        for v in non_free_vertices(g):
            gv = complete_at(g, v)
            if (fn(m, delete_vertices(g, [v])[0]) >= value and fn(m, gv) >= value
                    and fn(m, delete_vertices(gv, [v])[0]) >= value - 1):
                break
        else:
            violations.append((g, "condition (2): no suitable non-free vertex"))
    return DCompatibilityCheck(not violations, violations)
