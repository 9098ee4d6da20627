"""Greedy single-path fair clique construction used to seed the exact search."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .color import Coloring, colorful_degrees, greedy_color
from .graph import A, AttributedGraph, k_core
from .result import HEURISTIC, FairCliqueResult, is_fair_counts


@dataclass
class HeuristicOutcome:
    clique: FairCliqueResult
    ub: int
    coloring: Coloring
    residual: AttributedGraph  # graph the coloring and ub refer to


def _argmax(candidates, score: Sequence[int]) -> int:
    return min(candidates, key=lambda v: (-score[v], v))


def greedy_fair_clique(g: AttributedGraph, score: Sequence[int], k: int, delta: int) -> list[int]:
    """Grow one clique from the top-scoring vertex, alternating attributes.

    Each step adds the best-scoring candidate of the attribute whose turn it
    is. Once an attribute runs out, the other one is capped at its count plus
    ``delta``. Returns the clique if it ends fair, else an empty list.
    """
    if g.num_vertices == 0:
        return []
    attrs = g.attributes
    root = _argmax(range(g.num_vertices), score)
    members = [root]
    have = [0, 0]
    have[attrs[root]] += 1
    cand = set(g.adjacency[root])
    left = [0, 0]
    for v in cand:
        left[attrs[v]] += 1
    turn = 1 - attrs[root]
    cap = -1
    while True:
        if left[turn] == 0 and cap < 0:
            cap = have[turn] + delta
        if cap >= 0:
            for x in (A, 1 - A):
                if have[x] >= cap and left[x]:
                    cand = {v for v in cand if attrs[v] != x}
                    left[x] = 0
        if not cand:
            break
        if left[turn] == 0:
            turn = 1 - turn
            continue
        v = _argmax((u for u in cand if attrs[u] == turn), score)
        members.append(v)
        have[attrs[v]] += 1
        turn = 1 - attrs[v]
        nv = set(g.adjacency[v])
        cand = {u for u in cand if u in nv}
        left = [0, 0]
        for u in cand:
            left[attrs[u]] += 1
        if len(cand) + len(members) < 2 * k:
            return []
        if have[0] + left[0] < k or have[1] + left[1] < k:
            return []
    return sorted(members) if is_fair_counts(have[0], have[1], k, delta) else []


def _check(k: int, delta: int) -> None:
    if k < 1 or delta < 0:
        raise ValueError("need k >= 1 and delta >= 0")


def _result(g, members, k, delta, t0) -> FairCliqueResult:
    return FairCliqueResult(g.vertex_set(members), k, delta, HEURISTIC,
                            elapsed_ms=(time.perf_counter() - t0) * 1e3)


def deg_heur(g: AttributedGraph, k: int, delta: int) -> FairCliqueResult:
    """Greedy fair clique driven by vertex degree."""
    _check(k, delta)
    t0 = time.perf_counter()
    score = [len(nb) for nb in g.adjacency]
    return _result(g, greedy_fair_clique(g, score, k, delta), k, delta, t0)


def colorful_deg_heur(g: AttributedGraph, k: int, delta: int,
                      coloring: Coloring | None = None) -> FairCliqueResult:
    """Greedy fair clique driven by min(D_a, D_b) under one greedy coloring."""
    _check(k, delta)
    t0 = time.perf_counter()
    if coloring is None:
        coloring = greedy_color(g)
    da, db = colorful_degrees(g, coloring)
    score = [min(a, b) for a, b in zip(da, db)]
    return _result(g, greedy_fair_clique(g, score, k, delta), k, delta, t0)


def heur_rfc(g: AttributedGraph, k: int, delta: int) -> HeuristicOutcome:
    """Best of both greedy runs, plus a color-count bound on anything larger.

    A fair clique larger than the incumbent of size s lies in the (s-1)-core,
    so the residual graph returned is that core; with no incumbent the
    (2k-1)-core is used since every fair clique has at least 2k vertices.
    """
    _check(k, delta)
    t0 = time.perf_counter()
    index = g.index_of_labels()
    first = greedy_fair_clique(g, [len(nb) for nb in g.adjacency], k, delta)
    best = first
    core = k_core(g, len(first) - 1 if first else 2 * k - 1)
    second = colorful_deg_heur(core, k, delta).vertices.members
    if len(second) > len(best):
        best = [index[core.labels[v]] for v in second]
        core = k_core(core, len(best) - 1)
    coloring = greedy_color(core)
    ub = coloring.num_colors if core.num_vertices else 0
    return HeuristicOutcome(_result(g, best, k, delta, t0), ub, coloring, core)
