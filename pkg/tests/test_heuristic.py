import pytest

from _fixtures import clique_edges, two_clique_graph, rainbow_clique
from fairclique.graph import A, B, AttributedGraph, gnp_random_graph, k_core
from fairclique.heuristic import colorful_deg_heur, deg_heur, greedy_fair_clique, heur_rfc
from fairclique.oracle import oracle_max_fair_clique
from fairclique.result import verify_fair_clique
from fairclique.search import max_rfc


@pytest.mark.parametrize("fn", [deg_heur, colorful_deg_heur])
def test_whole_rainbow_clique(fn):
    g = rainbow_clique(3, 3)
    assert fn(g, 3, 0).size == 6


@pytest.mark.parametrize("fn", [deg_heur, colorful_deg_heur])
def test_no_b_vertices(fn):
    g = AttributedGraph.from_edges(4, clique_edges(range(4)), [A] * 4)
    assert fn(g, 1, 1).size == 0


def test_colorful_statistic_prefers_rainbow_side():
    # vertex 0 has 8 pendant B leaves plus one A; a 3/3 clique on 10..15 is rainbow
    edges = [(0, i) for i in range(1, 10)] + clique_edges(range(10, 16))
    attrs = [A, A] + [B] * 8 + [A, A, A, B, B, B]
    g = AttributedGraph.from_edges(16, edges, attrs)
    assert set(colorful_deg_heur(g, 2, 0).vertices) == set(range(10, 16))
    assert deg_heur(g, 2, 0).size == 0  # the degree leader is a dead end


def test_two_clique_graph():
    g = two_clique_graph()
    out = heur_rfc(g, 3, 1)
    assert verify_fair_clique(g, out.clique.vertices, 3, 1)
    assert 6 <= out.clique.size <= 7
    assert out.ub >= out.clique.size


def test_empty_graph():
    out = heur_rfc(AttributedGraph([], []), 2, 1)
    assert out.clique.size == 0 and out.ub == 0


@pytest.mark.parametrize("seed", range(30))
def test_dominance_and_core_shrink(seed):
    g = gnp_random_graph(15 + seed, (0.3, 0.5, 0.7)[seed % 3], 3000 + seed)
    k, delta = 1 + seed % 3, seed % 3
    exact = max_rfc(g, k, delta)
    out = heur_rfc(g, k, delta)
    for res in (out.clique, deg_heur(g, k, delta), colorful_deg_heur(g, k, delta)):
        assert res.is_valid(g)
        assert res.size <= exact.size
    if exact.size > out.clique.size:
        labels = set(out.residual.labels)
        assert set(exact.vertices) <= labels
        assert out.ub >= oracle_max_fair_clique(out.residual, k, delta).size
        assert out.ub >= exact.size


def test_greedy_aborts_when_minority_cannot_reach_k():
    g = rainbow_clique(4, 1)
    assert greedy_fair_clique(g, [1] * 5, 2, 5) == []


def test_residual_is_core():
    g = gnp_random_graph(60, 0.3, 9)
    out = heur_rfc(g, 2, 1)
    assert out.residual == k_core(out.residual, max(out.clique.size - 1, 3))
