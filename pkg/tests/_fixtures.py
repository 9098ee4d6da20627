"""Shared graph builders for the test suite."""

from __future__ import annotations

import itertools

import numpy as np

from fairclique.color import Coloring, compact
from fairclique.graph import A, B, AttributedGraph, gnp_random_graph


def v(i: int) -> int:
    """Vertex v_i of the hand-drawn fixtures (1-based) as a 0-based id."""
    return i - 1


def clique_edges(members):
    return list(itertools.combinations(members, 2))


# 15 vertices: an 8-clique S split 5 A / 3 B, a 3/3 six-clique sharing v7 and v8
# with S, and v2 whose common neighbourhood with v5 is {v1, v6, v9}.
BIG_CLIQUE = tuple(v(i) for i in (7, 8, 10, 11, 12, 13, 14, 15))
SIX_CLIQUE = tuple(v(i) for i in (1, 5, 6, 7, 8, 9))
_TWO_CLIQUE_A = {1, 3, 5, 6, 11, 12, 13, 14, 15}


def two_clique_graph() -> AttributedGraph:
    edges = clique_edges(BIG_CLIQUE) + clique_edges(SIX_CLIQUE)
    edges += [(v(2), v(j)) for j in (1, 5, 6, 9)]
    edges += [(v(2), v(3)), (v(3), v(4)), (v(4), v(10))]
    attrs = [A if i in _TWO_CLIQUE_A else B for i in range(1, 16)]
    return AttributedGraph.from_edges(15, edges, attrs)


def five_color_path_graph() -> tuple[AttributedGraph, Coloring]:
    """Five vertices colored c1..c5 along v3, v4, v5, v1, v2 with two chords."""
    edges = [(v(3), v(4)), (v(4), v(5)), (v(5), v(1)), (v(1), v(2)),
             (v(3), v(5)), (v(4), v(1))]
    attrs = [A, B, A, B, A]
    colors = [0] * 5
    for c, i in enumerate((3, 4, 5, 1, 2)):
        colors[v(i)] = c
    g = AttributedGraph.from_edges(5, edges, attrs)
    return g, Coloring(tuple(colors), 5)


def mixed_color_edge_graph() -> tuple[AttributedGraph, Coloring, int, int]:
    """An (A,A) edge (0, 1) whose common neighbours form groups c_a=1, c_b=2, c_m=2.

    Two helper cliques, one seen only by vertex 0 and one only by vertex 1,
    give every other edge enough colorful support at k=4.
    """
    attrs = [A, A, A, B, B, A, B, A, B]
    colors = [6, 7, 1, 2, 3, 4, 4, 5, 5]
    only_u = list(range(9, 17))
    only_v = list(range(17, 25))
    attrs += [A, A, A, A, B, B, B, B] * 2
    colors += list(range(8, 24))
    n = len(attrs)

    def joined(i, j):
        if colors[i] == colors[j]:
            return False
        pair = {i, j}
        if 0 in pair and pair & set(only_v):
            return False
        if 1 in pair and pair & set(only_u):
            return False
        return True

    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if joined(i, j)]
    return AttributedGraph.from_edges(n, edges, attrs), compact(colors), 0, 1


def rainbow_clique(count_a: int, count_b: int) -> AttributedGraph:
    n = count_a + count_b
    return AttributedGraph.from_edges(n, clique_edges(range(n)), [A] * count_a + [B] * count_b)


def star(leaves: int) -> AttributedGraph:
    attrs = [A] + [B if i % 2 else A for i in range(leaves)]
    return AttributedGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], attrs)


def path_graph(n: int) -> AttributedGraph:
    return AttributedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)],
                                      [i % 2 for i in range(n)])


CORPUS_PROBS = (0.3, 0.5, 0.7)
CORPUS_KS = (1, 2, 3)
CORPUS_DELTAS = (0, 1, 2)
CORPUS_REPEATS = 8


def corpus(repeats: int = CORPUS_REPEATS, n_range=(10, 40)):
    """Seeded instances (index, graph, p, k, delta) over the full parameter grid."""
    rng = np.random.default_rng(20240501)
    out = []
    idx = 0
    for p in CORPUS_PROBS:
        for k in CORPUS_KS:
            for delta in CORPUS_DELTAS:
                for _ in range(repeats):
                    n = int(rng.integers(n_range[0], n_range[1] + 1))
                    out.append((idx, gnp_random_graph(n, p, 1000 + idx), p, k, delta))
                    idx += 1
    return out


def subset_max_fair(g: AttributedGraph, k: int, delta: int) -> int:
    """Exhaustive check of every vertex subset (n <= 18)."""
    n = g.num_vertices
    if n > 18:
        raise ValueError("subset enumeration limited to 18 vertices")
    size = 1 << n
    ok = np.zeros(size, dtype=bool)
    cnt_b = np.zeros(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    ok[0] = True
    masks = g.adjacency_masks
    for i in range(n):
        lo, hi = 1 << i, 2 << i
        rest = np.arange(0, lo, dtype=np.int64)
        ok[lo:hi] = ok[:lo] & ((rest & ~np.int64(masks[i])) == 0)
        cnt_b[lo:hi] = cnt_b[:lo] + g.attributes[i]
        pop[lo:hi] = pop[:lo] + 1
    cnt_a = pop - cnt_b
    fair = ok & (cnt_a >= k) & (cnt_b >= k) & (np.abs(cnt_a - cnt_b) <= delta)
    return int(pop[fair].max()) if fair.any() else 0


def longest_colorful_path_bruteforce(g: AttributedGraph, colors) -> int:
    """DFS over simple paths with pairwise distinct colors."""
    best = 1 if g.num_vertices else 0

    def dfs(u, used_colors, seen, length):
        nonlocal best
        best = max(best, length)
        for w in g.adjacency[u]:
            if w not in seen and colors[w] not in used_colors:
                seen.add(w)
                used_colors.add(colors[w])
                dfs(w, used_colors, seen, length + 1)
                seen.discard(w)
                used_colors.discard(colors[w])

    for s in range(g.num_vertices):
        dfs(s, {colors[s]}, {s}, 1)
    return best
