import pytest

from gbei.caps import parse_caps
from gbei.errors import CapExceeded
from gbei.fixtures import FIGURES
from gbei.graph import SimpleGraph, disjoint_union
from gbei.oracle import ASSUMPTIONS, depth_oracle, oracle_depth
from gbei.symbolic import MonomialOrder

from conftest import random_graph


@pytest.mark.parametrize("m,g,expected", [
    (2, SimpleGraph.complete(2), 3),
    (2, SimpleGraph.cycle(4), 4),
    (2, SimpleGraph.path(3), 4),
    (3, SimpleGraph.path(3), 5),
    (2, FIGURES["fig1"], 4),
    (2, FIGURES["fig4"], 5),
])
def test_reference_depths(m, g, expected):
    assert oracle_depth(m, g) == expected


def test_certificate_fields():
    cert = depth_oracle(2, SimpleGraph.cycle(4)).as_dict()
    assert cert["depth"] + cert["pd"] == 8
    assert cert["order"] == "degrevlex"
    assert cert["assumptionFlags"] == list(ASSUMPTIONS)
    assert cert["leadingTerms"] and all(t.startswith("x[") for t in cert["leadingTerms"])
    assert len(cert["maximizingSubset"]) == cert["pd"] + 1 + cert["homologyDim"]


def test_orders_agree(rng):
    lex = MonomialOrder("lex")
    for _ in range(12):
        g = random_graph(rng, rng.randint(2, 5), 0.5)
        assert oracle_depth(2, g) == oracle_depth(2, g, order=lex)


def test_additive_over_components():
    a, b = SimpleGraph.path(2), SimpleGraph.cycle(3)
    assert oracle_depth(2, disjoint_union(a, b)) == oracle_depth(2, a) + oracle_depth(2, b)
    assert oracle_depth(2, SimpleGraph(3)) == 6  # zero ideal: the whole ring


def test_cap_refuses_large_instances():
    with pytest.raises(CapExceeded):
        oracle_depth(4, SimpleGraph.path(4))
    with pytest.raises(CapExceeded):
        depth_oracle(2, SimpleGraph.path(4), caps=parse_caps("oracle_vars=6"))
