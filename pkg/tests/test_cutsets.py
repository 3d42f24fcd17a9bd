import pytest

from gbei.cutsets import (enumerate_cutsets, enumerate_cutsets_bruteforce, has_cut_point_property,
                          is_accessible, is_unmixed, prime_component_support)
from gbei.errors import CapExceeded, NotACutset
from gbei.graph import SimpleGraph

from conftest import all_graphs, random_graph


def test_pruned_enumeration_equals_brute_force(rng):
    for n in range(1, 5):
        for g in all_graphs(n):
            assert enumerate_cutsets(g).cutsets == enumerate_cutsets_bruteforce(g).cutsets
    for _ in range(150):
        g = random_graph(rng, rng.randint(5, 9), 0.4)
        assert enumerate_cutsets(g).cutsets == enumerate_cutsets_bruteforce(g).cutsets


def test_empty_set_always_present(rng):
    for _ in range(30):
        g = random_graph(rng, 6, 0.5)
        fam = enumerate_cutsets(g)
        assert fam.cutsets[0][0] == frozenset()
        assert frozenset() in fam


def test_cycle_and_path():
    assert enumerate_cutsets(SimpleGraph.cycle(4)).to_json_obj() == [
        {"T": [], "c": 1}, {"T": [1, 3], "c": 2}, {"T": [2, 4], "c": 2}]
    fam = enumerate_cutsets(SimpleGraph.path(4))
    assert set(fam.sets()) == {frozenset(), frozenset({2}), frozenset({3})}
    assert is_unmixed(SimpleGraph.path(4)) and is_accessible(SimpleGraph.path(4))


def test_unmixed_vs_not():
    assert not is_unmixed(SimpleGraph.cycle(4))  # c({1,3}) = 2 < |T| + 1
    assert not is_accessible(SimpleGraph.cycle(4))
    assert is_unmixed(SimpleGraph.complete(4)) and is_accessible(SimpleGraph.complete(4))
    star = SimpleGraph(4, [(1, 2), (1, 3), (1, 4)])
    assert not is_unmixed(star)


def test_support_and_errors():
    assert sorted(map(sorted, prime_component_support(SimpleGraph.path(3), {2}))) == [[1], [3]]
    with pytest.raises(NotACutset):
        prime_component_support(SimpleGraph.path(3), {1})
    assert not has_cut_point_property(SimpleGraph.complete(3), {1})
    with pytest.raises(CapExceeded):
        enumerate_cutsets(SimpleGraph.path(17))
