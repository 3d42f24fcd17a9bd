import hashlib

import pytest

from gbei.completion import complete_at, complete_at_set
from gbei.fixtures import FIGURES, get, h1_graph, names, triangle_chain_graph
from gbei.graph import SimpleGraph

EDGE_LIST_SHA256 = {
    "fig1": "e6685229a54598563b6d5890dfb36b56a28b628ace05b8ca05d1e39bf287c437",
    "fig2": "851be50eab567a7f798ad075a697bfa4e6be1a59958d544f9dfdd6fdbcbc3103",
    "fig3": "20f83cf13b406ab959230912c756b6fdc08dc56c51c5abf921c3fd5d485a3d2f",
    "fig4": "31b5550de62776b5eda9c36837f2ad2f07e34412c055632f78caa3bbbe5776c4",
    "fig5": "c4ec168d136194b8ac7d6e3222912a024d7fe590bd32e6ec0c22e9a41886b26d",
}


@pytest.mark.parametrize("name", sorted(EDGE_LIST_SHA256))
def test_figure_hashes(name):
    assert hashlib.sha256(get(name).to_json().encode()).hexdigest() == EDGE_LIST_SHA256[name]


def test_fig2_is_the_completed_hexagon():
    c6 = SimpleGraph.cycle(6)
    assert complete_at(complete_at(complete_at(c6, 1), 2), 4) == FIGURES["fig2"]
    assert complete_at_set(c6, {4, 2, 1}).result == FIGURES["fig2"]


def test_constructed_families():
    assert triangle_chain_graph(6) == FIGURES["fig3"]
    assert h1_graph(3, [1, 1]).edge_count() == FIGURES["fig1"].edge_count()
    with pytest.raises(ValueError):
        h1_graph(0, [1, 1])
    with pytest.raises(ValueError):
        triangle_chain_graph(0)


def test_families_by_name():
    assert get("cycle5") == SimpleGraph.cycle(5)
    assert get("path3") == SimpleGraph.path(3)
    assert get("complete4").is_complete()
    assert get("empty2").edge_count() == 0
    with pytest.raises(KeyError):
        get("star4")
    assert names()[:5] == ["fig1", "fig2", "fig3", "fig4", "fig5"]
