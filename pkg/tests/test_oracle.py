import pytest

from _fixtures import clique_edges, two_clique_graph, subset_max_fair
from fairclique.graph import A, AttributedGraph, gnp_random_graph
from fairclique.oracle import (OracleSizeError, max_fair_in_clique, maximal_cliques,
                               oracle_max_fair_clique)
from fairclique.result import verify_fair_clique


def test_closed_form():
    assert max_fair_in_clique(5, 3, 3, 1) == 7
    assert max_fair_in_clique(2, 5, 3, 9) == 0
    assert max_fair_in_clique(4, 4, 3, 0) == 8
    assert max_fair_in_clique(3, 5, 3, 1) == 7


def test_two_clique_graph():
    res = oracle_max_fair_clique(two_clique_graph(), 3, 1)
    assert res.size == 7
    assert verify_fair_clique(two_clique_graph(), res.witness, 3, 1)


def test_single_attribute_graph():
    g = AttributedGraph.from_edges(6, clique_edges([0, 1, 2]) + clique_edges([3, 4, 5]), [A] * 6)
    assert oracle_max_fair_clique(g, 1, 3).size == 0


def test_maximal_cliques_are_maximal():
    g = gnp_random_graph(16, 0.4, 3)
    masks = list(maximal_cliques(g))
    assert len(masks) == len(set(masks))
    for m in masks:
        members = [x for x in range(16) if m >> x & 1]
        assert g.is_clique(members)
        assert not any(g.is_clique(members + [y]) for y in range(16) if not m >> y & 1)


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_subset_enumeration(seed):
    g = gnp_random_graph(10 + seed % 9, (0.3, 0.5, 0.7)[seed % 3], 500 + seed)
    for k in (1, 2, 3):
        for delta in (0, 1, 2):
            res = oracle_max_fair_clique(g, k, delta)
            assert res.size == subset_max_fair(g, k, delta)
            if res.size:
                assert len(res.witness) == res.size
                assert verify_fair_clique(g, res.witness, k, delta)


def test_size_guard():
    g = gnp_random_graph(70, 0.05, 1)
    with pytest.raises(OracleSizeError):
        oracle_max_fair_clique(g, 1, 0)
    assert oracle_max_fair_clique(g, 1, 0, size_limit=None).size >= 0
    with pytest.raises(OracleSizeError):
        oracle_max_fair_clique(gnp_random_graph(12, 0.5, 1), 1, 0, size_limit=10)
