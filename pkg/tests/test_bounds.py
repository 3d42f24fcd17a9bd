import pytest

from gbei.bounds import (FormulaConflict, check_d_compatible, exact_depth, lower_bound, psi, report,
                         upper_bound)
from gbei.corpus import connected_graphs_up_to_isomorphism
from gbei.errors import CompleteInput, DisconnectedInput
from gbei.fixtures import FIGURES, h1_graph, triangle_chain_graph
from gbei.graph import SimpleGraph, disjoint_union

from conftest import all_graphs


def test_reference_values():
    assert lower_bound(3, SimpleGraph.cycle(6)) == 4
    assert lower_bound(2, disjoint_union(SimpleGraph.complete(2), SimpleGraph.complete(3))) == 7
    for m in (2, 3, 4):
        assert lower_bound(m, FIGURES["fig5"]) == m + 4
        assert upper_bound(m, FIGURES["fig5"]) == m + 6
        assert upper_bound(m, FIGURES["fig1"]) == m + 2
    assert upper_bound(3, SimpleGraph.cycle(6)) == 7


def test_errors():
    with pytest.raises(ValueError):
        lower_bound(1, SimpleGraph.path(2))
    with pytest.raises(CompleteInput):
        upper_bound(2, SimpleGraph.complete(3))
    with pytest.raises(DisconnectedInput):
        upper_bound(2, SimpleGraph(3, [(1, 2)]))


def test_dispatch_sources():
    assert exact_depth(2, SimpleGraph.path(4)) == exact_depth(2, SimpleGraph.path(4))
    e = exact_depth(2, SimpleGraph.path(4))
    assert (e.value, e.source) == (5, "BlockGraph")
    e = exact_depth(2, FIGURES["fig3"])
    assert (e.value, e.source) == (8, "H3")
    for m in (2, 3):
        for n in range(4, 9):
            e = exact_depth(m, SimpleGraph.cycle(n))
            assert (e.value, e.source) == (m + n - 2, "H2")
    e = exact_depth(3, FIGURES["fig1"])
    assert (e.value, e.source) == (5, "H1")
    assert exact_depth(2, FIGURES["fig5"]) is None
    assert exact_depth(2, FIGURES["fig4"]) is None
    e = exact_depth(2, disjoint_union(SimpleGraph.complete(2), SimpleGraph.complete(3)))
    assert (e.value, e.source) == (7, "DisjointComplete")


def test_first_tag_wins_and_all_agree():
    e = exact_depth(2, SimpleGraph.path(3))  # block, strongly unmixed, H1 all fire
    assert e.source == "BlockGraph" and {"StronglyUnmixed", "H1"} <= set(e.agreeing)


def test_disconnected_sums_components():
    g = disjoint_union(SimpleGraph.cycle(4), SimpleGraph.path(3))
    rep = report(2, g)
    c, p = report(2, SimpleGraph.cycle(4)), report(2, SimpleGraph.path(3))
    assert rep.lower == c.lower + p.lower
    assert rep.upper == c.upper + p.upper
    assert rep.exact == c.exact + p.exact


def test_report_gap_notes():
    for k in (2, 3, 4):
        for m in (2, 3):
            rep = report(m, SimpleGraph.cycle(2 * k))
            assert (rep.lower, rep.upper, rep.exact) == (m + k - 2, m + 2 * k - 2, m + 2 * k - 2)
            assert f"upper - lower = {k}" in rep.gap_notes and "upper bound tight" in rep.gap_notes
    rep = report(2, triangle_chain_graph(4))
    assert "lower bound tight" in rep.gap_notes


def test_report_oracle_modes():
    rep = report(2, FIGURES["fig5"], oracle="auto")
    assert (rep.lower, rep.upper, rep.exact, rep.exact_source) == (6, 8, 7, "Oracle")
    assert "strictly between" in rep.gap_notes
    rep = report(2, SimpleGraph.cycle(5), oracle=True)
    assert rep.exact_source == "H2" and rep.oracle["depth"] == 5
    assert report(2, FIGURES["fig5"]).exact is None
    assert report(4, FIGURES["fig5"], oracle="auto").exact is None  # mn = 28, over the cap


def test_h1_lower_equals_upper():
    for s in (1, 2, 3):
        for petals in ([1, 1], [2, 3], [1, 1, 1]):
            g = h1_graph(s, petals)
            for m in (2, 3, 4):
                assert lower_bound(m, g) == upper_bound(m, g) == exact_depth(m, g).value


def test_soundness_small_exhaustive():
    for n in range(2, 6):
        for _, g in connected_graphs_up_to_isomorphism(n):
            for m in (2, 3):
                rep = report(m, g)
                if rep.upper is not None:
                    assert rep.lower <= rep.upper
                if rep.exact is not None:
                    assert rep.lower <= rep.exact
                    assert rep.upper is None or rep.exact <= rep.upper


def test_disjoint_complete_lower_is_exact():
    g = disjoint_union(SimpleGraph.complete(3), SimpleGraph.complete(1), SimpleGraph.complete(2))
    for m in (2, 3, 5):
        assert lower_bound(m, g) == exact_depth(m, g).value == (m - 1) * 3 + 6


def test_psi_is_d_compatible():
    graphs = [g for n in range(1, 5) for g in all_graphs(n)]
    for m in (2, 3):
        assert check_d_compatible(psi, m, graphs).ok


def test_d_compatible_checker_rejects_bad_map():
    res = check_d_compatible(lambda m, g: 100, 2, [SimpleGraph.complete(2)])
    assert not res.ok
    res = check_d_compatible(lambda m, g: g.edge_count(), 2, [SimpleGraph.path(3)])
    assert not res.ok


def test_conflict_is_raised(monkeypatch):
    import gbei.bounds as b
    monkeypatch.setattr(b, "_closed_forms_connected", lambda m, g: [("BlockGraph", 1), ("H1", 2)])
    with pytest.raises(FormulaConflict):
        exact_depth(2, SimpleGraph.path(3))
