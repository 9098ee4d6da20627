"""Exact maximum fair clique search by alternating-attribute branch and bound.

Each branch adds one vertex of the attribute whose turn it is, so both sides
grow in lockstep. Within one attribute, vertices join in increasing
colorful-core peel rank, which removes permutation duplicates without losing
any clique. A side may be *closed* once it has at least k members; the other
side is then capped at the closed count plus delta.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import BoundContext, colorful_core_decomposition, combined_bound, parse_bound_names
from .color import Coloring, greedy_color
from .graph import A, B, AttributedGraph, connected_components, induced_subgraph
from .heuristic import heur_rfc
from .reduce import ReductionReport, reduce_pipeline
from .result import EXACT, FairCliqueResult, verify_fair_clique

logger = logging.getLogger(__name__)

DEFAULT_BOUNDS = "ad,cdeg"

__all__ = ["SearchConfig", "FairCliqueResult", "verify_fair_clique", "cal_color_od",
           "search_component", "max_rfc"]


@dataclass(frozen=True)
class SearchConfig:
    bounds: tuple[str, ...] = field(default_factory=lambda: parse_bound_names(DEFAULT_BOUNDS))
    use_heuristic: bool = True
    reduce: bool = True
    parallel: bool = False
    node_limit: int = 0  # 0 = unlimited; per component in parallel mode
    workers: int | None = None

    @classmethod
    def with_bounds(cls, spec, **kw) -> "SearchConfig":
        return cls(bounds=parse_bound_names(spec), **kw)


def cal_color_od(g: AttributedGraph, coloring: Coloring) -> tuple[int, ...]:
    """Peel rank of every vertex in the colorful core decomposition."""
    return colorful_core_decomposition(g, coloring).rank


class _NodeLimit(Exception):
    pass


@dataclass
class ComponentOutcome:
    members: list[int]  # local ids of the best clique found, empty if none beat the floor
    nodes: int
    complete: bool
    improvements: list[int]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def search_component(g: AttributedGraph, k: int, delta: int, bounds=(), incumbent: int = 0,
                     node_limit: int = 0, coloring: Coloring | None = None) -> ComponentOutcome:
    """Largest fair clique of ``g`` with more than ``incumbent`` vertices.

    Vertices are relabelled to bit positions by peel rank so that candidate
    sets are plain integers.
    """
    n = g.num_vertices
    if coloring is None:
        coloring = greedy_color(g)
    rank = cal_color_od(g, coloring)
    vert = [0] * n
    for v, p in enumerate(rank):
        vert[p] = v
    attr_of = [g.attributes[vert[p]] for p in range(n)]
    side = [0, 0]
    for p, x in enumerate(attr_of):
        side[x] |= 1 << p
    adj = []
    for p in range(n):
        m = 0
        for w in g.adjacency[vert[p]]:
            m |= 1 << rank[w]
        adj.append(m)
    # ordering filter: any vertex of the other attribute, or a later one of the same
    filt = [side[1 - x] | (side[x] & ~((2 << p) - 1)) for p, x in enumerate(attr_of)]
    two_k = 2 * k

    best = incumbent
    best_r: list[int] = []
    improvements: list[int] = []
    nodes = 0
    clique: list[int] = []

    def top_level_bound(u: int, cand: int) -> int | None:
        members = [vert[p] for p in _bits(cand | (1 << u))]
        sub, mapping = induced_subgraph(g, members)
        ctx = BoundContext(sub, coloring.restrict(mapping), k, delta)
        return combined_bound(ctx, bounds)

    def branch(ra: int, rb: int, cand: int, turn: int, cap: int) -> None:
        nonlocal best, best_r, nodes
        if node_limit and nodes >= node_limit:
            raise _NodeLimit
        nodes += 1
        if cap < 0 and not cand & side[turn]:
            mine = ra if turn == A else rb
            if mine < k:
                return
            cap = mine + delta
        if cap >= 0:
            if ra >= cap:
                cand &= ~side[A]
            if rb >= cap:
                cand &= ~side[B]
        if ra >= k and rb >= k and abs(ra - rb) <= delta and ra + rb > best:
            best = ra + rb
            best_r = list(clique)
            improvements.append(best)
        if not cand:
            return
        if not cand & side[turn]:
            turn = 1 - turn
        other = 1 - turn
        top = not clique
        for u in _bits(cand & side[turn]):
            sub = cand & adj[u] & filt[u]
            na = ra + (turn == A)
            nb = rb + (turn == B)
            pa = na + (sub & side[A]).bit_count()
            pb = nb + (sub & side[B]).bit_count()
            if cap >= 0:
                pa, pb = min(pa, cap), min(pb, cap)
            if pa < k or pb < k or pa + pb <= best or pa + pb < two_k:
                continue
            if top and bounds:
                ub = top_level_bound(u, sub)
                if ub < two_k or ub <= best:
                    continue
            clique.append(u)
            branch(na, nb, sub, other, cap)
            clique.pop()
        # close the current side here and fill only the other one
        if cap < 0:
            mine, theirs = (ra, rb) if turn == A else (rb, ra)
            if mine >= k and theirs <= mine + delta:
                rest = cand & ~side[turn]
                if mine + min(theirs + (rest & side[other]).bit_count(), mine + delta) > best:
                    branch(ra, rb, rest, other, mine + delta)

    complete = True
    if n:
        try:
            branch(0, 0, (1 << n) - 1, A, -1)
        except _NodeLimit:
            complete = False
    return ComponentOutcome(sorted(vert[p] for p in best_r), nodes, complete, improvements)


def _component_job(args):
    sub, k, delta, bounds, incumbent, node_limit = args
    return search_component(sub, k, delta, bounds, incumbent, node_limit)


def max_rfc(g: AttributedGraph, k: int, delta: int,
            config: SearchConfig | None = None) -> FairCliqueResult:
    """Maximum (k, delta)-fair clique of ``g``; vertex ids refer to ``g``."""
    if k < 1 or delta < 0:
        raise ValueError("need k >= 1 and delta >= 0")
    config = config or SearchConfig()
    t_start = time.perf_counter()
    phases: dict[str, float] = {}
    index = g.index_of_labels()

    t0 = time.perf_counter()
    if config.reduce:
        work, report = reduce_pipeline(g, k)
    else:
        work = g
        report = ReductionReport(g.num_vertices, g.num_vertices, g.num_edges, g.num_edges)
    phases["reduce"] = (time.perf_counter() - t0) * 1e3

    best: list[int] = []  # ids in g
    improvements: list[int] = []
    nodes = 0
    complete = True

    t0 = time.perf_counter()
    skip_search = work.num_vertices == 0
    if config.use_heuristic and not skip_search:
        outcome = heur_rfc(work, k, delta)
        seed = outcome.clique.vertices.members
        if seed:
            best = [index[work.labels[v]] for v in seed]
            improvements.append(len(best))
        if outcome.ub <= len(best) or outcome.ub < 2 * k:
            skip_search = True
        work = outcome.residual
    phases["heuristic"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    if not skip_search:
        floor = len(best)
        jobs = []
        for comp in connected_components(work):
            if len(comp) < 2 * k or len(comp) <= floor:
                continue
            sub = induced_subgraph(work, comp)[0]
            jobs.append(sub)
        if config.parallel and len(jobs) > 1:
            args = [(sub, k, delta, config.bounds, floor, config.node_limit) for sub in jobs]
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                outcomes = list(pool.map(_component_job, args))
            for sub, out in zip(jobs, outcomes):
                nodes += out.nodes
                complete &= out.complete
                if len(out.members) > len(best):
                    best = [index[sub.labels[v]] for v in out.members]
                    improvements.append(len(best))
        else:
            budget = config.node_limit
            for sub in jobs:
                if config.node_limit and budget <= 0:
                    complete = False
                    break
                out = search_component(sub, k, delta, config.bounds, len(best),
                                       budget if config.node_limit else 0)
                nodes += out.nodes
                budget -= out.nodes
                if out.members:
                    best = [index[sub.labels[v]] for v in out.members]
                    improvements.extend(out.improvements)
                if not out.complete:
                    complete = False
                    break
    phases["search"] = (time.perf_counter() - t0) * 1e3

    result = FairCliqueResult(g.vertex_set(best), k, delta, EXACT, nodes=nodes,
                              elapsed_ms=(time.perf_counter() - t_start) * 1e3,
                              optimal=complete, phases_ms=phases, reduction=report,
                              improvements=improvements)
    if best and not verify_fair_clique(g, result.vertices, k, delta):
        raise AssertionError("search produced an invalid clique")
    return result
