"""Peeling reductions that discard vertices and edges outside every fair clique.

Two vertex-level rules (colorful core and its enhanced variant) and two
edge-level rules (colorful support and its enhanced variant). All four share
the same bookkeeping: for a vertex neighbourhood, or for the common
neighbourhood of an edge, keep per color the number of A and B members, then
count single-attribute colors apart from colors shared by both attributes.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import asdict, dataclass, field

from .color import Coloring, greedy_color
from .graph import A, B, AttributedGraph, induced_subgraph

# group index of a color entry [count_a, count_b]: 1 = A only, 2 = B only, 3 = mixed
_ONLY_A, _ONLY_B, _MIXED = 1, 2, 3


def _code(entry) -> int:
    return (entry[0] > 0) | ((entry[1] > 0) << 1)


def vertex_thresholds(attr: int, k: int) -> tuple[int, int]:
    """Distinct colors a fair-clique member needs among A- and B-neighbours."""
    return (k - 1, k) if attr == A else (k, k - 1)


def edge_thresholds(attr_u: int, attr_v: int, k: int) -> tuple[int, int]:
    """Distinct A/B colors an edge of a fair clique needs among common neighbours."""
    if attr_u == attr_v:
        return (k - 2, k) if attr_u == A else (k, k - 2)
    return (k - 1, k - 1)


def enhanced_support(c_a: int, c_b: int, c_m: int, t_a: int, t_b: int,
                     first: int = A) -> tuple[int, int]:
    """Hand mixed colors to the side ``first`` up to its deficit, then to the other side.

    Returns the resulting (A, B) color counts. A side already at its threshold
    keeps its exclusive count.
    """
    if first == A:
        gamma = min(max(t_a - c_a, 0), c_m)
        return c_a + gamma, c_b + min(max(t_b - c_b, 0), c_m - gamma)
    gamma = min(max(t_b - c_b, 0), c_m)
    return c_a + min(max(t_a - c_a, 0), c_m - gamma), c_b + gamma


def feasible(c_a: int, c_b: int, c_m: int, t_a: int, t_b: int) -> bool:
    """Can disjoint color sets of sizes t_a (A side) and t_b (B side) be drawn?"""
    return max(t_a - c_a, 0) + max(t_b - c_b, 0) <= c_m


def _plain_ok(c_a, c_b, c_m, t_a, t_b, first) -> bool:
    return c_a + c_m >= t_a and c_b + c_m >= t_b


def _enhanced_ok(c_a, c_b, c_m, t_a, t_b, first) -> bool:
    sa, sb = enhanced_support(c_a, c_b, c_m, t_a, t_b, first)
    return sa >= t_a and sb >= t_b


@dataclass
class StageReport:
    name: str
    vertices_removed: int
    edges_removed: int
    elapsed_ms: float


@dataclass
class ReductionReport:
    vertices_before: int
    vertices_after: int
    edges_before: int
    edges_after: int
    stages: list[StageReport] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def single(cls, name: str, before: AttributedGraph, after: AttributedGraph,
               elapsed_ms: float) -> "ReductionReport":
        stage = StageReport(name, before.num_vertices - after.num_vertices,
                            before.num_edges - after.num_edges, elapsed_ms)
        return cls(before.num_vertices, after.num_vertices, before.num_edges,
                   after.num_edges, [stage], elapsed_ms)


# -- vertex peeling ----------------------------------------------------------


def _neighbourhood_tables(g: AttributedGraph, colors) -> tuple[list[dict], list[list[int]]]:
    attrs = g.attributes
    tables = []
    groups = []
    for nb in g.adjacency:
        table: dict[int, list[int]] = {}
        for w in nb:
            entry = table.get(colors[w])
            if entry is None:
                entry = table[colors[w]] = [0, 0]
            entry[attrs[w]] += 1
        grp = [0, 0, 0, 0]
        for entry in table.values():
            grp[_code(entry)] += 1
        tables.append(table)
        groups.append(grp)
    return tables, groups


def _peel_vertices(g: AttributedGraph, k: int, coloring: Coloring, ok) -> list[int]:
    colors = coloring.colors
    attrs = g.attributes
    tables, groups = _neighbourhood_tables(g, colors)
    thr = [vertex_thresholds(x, k) for x in attrs]

    def passes(u):
        grp = groups[u]
        t_a, t_b = thr[u]
        return ok(grp[_ONLY_A], grp[_ONLY_B], grp[_MIXED], t_a, t_b, attrs[u])

    removed = [False] * g.num_vertices
    queue = deque()
    for u in range(g.num_vertices):
        if not passes(u):
            removed[u] = True
            queue.append(u)
    while queue:
        u = queue.popleft()
        cu, xu = colors[u], attrs[u]
        for w in g.adjacency[u]:
            if removed[w]:
                continue
            entry = tables[w][cu]
            before = _code(entry)
            entry[xu] -= 1
            after = _code(entry)
            if before != after:
                grp = groups[w]
                grp[before] -= 1
                grp[after] += 1
                if not passes(w):
                    removed[w] = True
                    queue.append(w)
    return [v for v in range(g.num_vertices) if not removed[v]]


def _vertex_reduction(name, ok, g, k, coloring):
    if k < 1:
        raise ValueError("k must be at least 1")
    t0 = time.perf_counter()
    if coloring is None:
        coloring = greedy_color(g)
    keep = _peel_vertices(g, k, coloring, ok)
    out = induced_subgraph(g, keep)[0]
    return out, ReductionReport.single(name, g, out, (time.perf_counter() - t0) * 1e3)


def colorful_core_reduce(g: AttributedGraph, k: int, coloring: Coloring | None = None):
    """Keep vertices with enough distinctly colored A- and B-neighbours.

    An A-vertex needs k-1 A-colors and k B-colors among its neighbours, a
    B-vertex the mirror image.
    """
    return _vertex_reduction("colorful_core", _plain_ok, g, k, coloring)


def en_colorful_core_reduce(g: AttributedGraph, k: int, coloring: Coloring | None = None):
    """Like :func:`colorful_core_reduce`, but each color may serve only one attribute."""
    return _vertex_reduction("en_colorful_core", _enhanced_ok, g, k, coloring)


# -- edge peeling ------------------------------------------------------------


class EdgeColorCounter:
    """Per-edge color tables over common neighbours, keyed by ``u * n + v`` with u < v."""

    def __init__(self, g: AttributedGraph, coloring: Coloring):
        n = g.num_vertices
        colors = coloring.colors
        attrs = g.attributes
        adj = g.adjacency
        sets = g.neighbor_sets
        self.n = n
        self.ids: dict[int, int] = {}
        self.endpoints: list[tuple[int, int]] = []
        self.tables: list[dict[int, list[int]]] = []
        self.groups: list[list[int]] = []
        for u, v in g.edges():
            self.ids[u * n + v] = len(self.endpoints)
            self.endpoints.append((u, v))
            small, other = (u, v) if len(adj[u]) <= len(adj[v]) else (v, u)
            so = sets[other]
            table: dict[int, list[int]] = {}
            for w in adj[small]:
                if w in so:
                    entry = table.get(colors[w])
                    if entry is None:
                        entry = table[colors[w]] = [0, 0]
                    entry[attrs[w]] += 1
            grp = [0, 0, 0, 0]
            for entry in table.values():
                grp[_code(entry)] += 1
            self.tables.append(table)
            self.groups.append(grp)

    def edge_id(self, u: int, v: int) -> int:
        return self.ids[u * self.n + v] if u < v else self.ids[v * self.n + u]

    def color_groups(self, u: int, v: int) -> tuple[int, int, int]:
        grp = self.groups[self.edge_id(u, v)]
        return grp[_ONLY_A], grp[_ONLY_B], grp[_MIXED]

    def support(self, u: int, v: int) -> tuple[int, int]:
        """Distinct A-colors and B-colors among the common neighbours."""
        c_a, c_b, c_m = self.color_groups(u, v)
        return c_a + c_m, c_b + c_m

    def discount(self, e: int, attr: int, color: int) -> bool:
        """Drop one common neighbour; True if a color changed group."""
        entry = self.tables[e][color]
        before = _code(entry)
        entry[attr] -= 1
        after = _code(entry)
        if before == after:
            return False
        grp = self.groups[e]
        grp[before] -= 1
        grp[after] += 1
        return True


def _edge_first(attr_u: int, attr_v: int) -> int:
    return B if attr_u == attr_v == B else A


def _peel_edges(g: AttributedGraph, k: int, coloring: Coloring, ok) -> list[bool]:
    colors = coloring.colors
    attrs = g.attributes
    adj = g.adjacency
    sets = g.neighbor_sets
    counter = EdgeColorCounter(g, coloring)
    ends = counter.endpoints
    groups = counter.groups
    ids = counter.ids
    n = g.num_vertices

    def passes(e):
        u, v = ends[e]
        t_a, t_b = edge_thresholds(attrs[u], attrs[v], k)
        grp = groups[e]
        return ok(grp[_ONLY_A], grp[_ONLY_B], grp[_MIXED], t_a, t_b,
                  _edge_first(attrs[u], attrs[v]))

    m = len(ends)
    alive = [True] * m
    queued = [False] * m
    queue = deque()
    for e in range(m):
        if not passes(e):
            queued[e] = True
            queue.append(e)
    while queue:
        e = queue.popleft()
        alive[e] = False
        u, v = ends[e]
        small, other = (u, v) if len(adj[u]) <= len(adj[v]) else (v, u)
        so = sets[other]
        for w in adj[small]:
            if w not in so:
                continue
            e1 = ids[small * n + w] if small < w else ids[w * n + small]
            e2 = ids[other * n + w] if other < w else ids[w * n + other]
            if not (alive[e1] and alive[e2]):
                continue
            # triangle (small, other, w) is destroyed now
            if counter.discount(e1, attrs[other], colors[other]) and not queued[e1] \
                    and not passes(e1):
                queued[e1] = True
                queue.append(e1)
            if counter.discount(e2, attrs[small], colors[small]) and not queued[e2] \
                    and not passes(e2):
                queued[e2] = True
                queue.append(e2)
    return alive


def _edge_reduction(name, ok, g, k, coloring):
    if k < 1:
        raise ValueError("k must be at least 1")
    t0 = time.perf_counter()
    if coloring is None:
        coloring = greedy_color(g)
    alive = _peel_edges(g, k, coloring, ok)
    out = subgraph_from_edge_mask(g, alive)
    return out, ReductionReport.single(name, g, out, (time.perf_counter() - t0) * 1e3)


def subgraph_from_edge_mask(g: AttributedGraph, alive: list[bool]) -> AttributedGraph:
    """Keep the edges flagged alive (in ``g.edges()`` order) and their endpoints."""
    keep_adj: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for flag, (u, v) in zip(alive, g.edges()):
        if flag:
            keep_adj[u].append(v)
            keep_adj[v].append(u)
    members = [v for v in range(g.num_vertices) if keep_adj[v]]
    pos = {v: i for i, v in enumerate(members)}
    adjacency = [sorted(pos[w] for w in keep_adj[v]) for v in members]
    return AttributedGraph(adjacency, [g.attributes[v] for v in members],
                           [g.labels[v] for v in members], check=False)


def colorful_sup_reduce(g: AttributedGraph, k: int, coloring: Coloring | None = None):
    """Peel edges whose common neighbourhood lacks distinct A/B colors."""
    return _edge_reduction("colorful_sup", _plain_ok, g, k, coloring)


def en_colorful_sup_reduce(g: AttributedGraph, k: int, coloring: Coloring | None = None):
    """Edge peeling where every common-neighbour color is committed to one attribute."""
    return _edge_reduction("en_colorful_sup", _enhanced_ok, g, k, coloring)


PIPELINE = (en_colorful_core_reduce, colorful_sup_reduce, en_colorful_sup_reduce)


def reduce_pipeline(g: AttributedGraph, k: int, coloring: Coloring | None = None,
                    recolor: bool = True):
    """Enhanced colorful core, then colorful support, then enhanced colorful support.

    With ``recolor`` (the default) each stage greedily recolors the residual
    graph. Otherwise ``coloring`` (or one greedy coloring of ``g``) is carried
    through all stages.
    """
    t0 = time.perf_counter()
    report = ReductionReport(g.num_vertices, g.num_vertices, g.num_edges, g.num_edges)
    if coloring is None and not recolor:
        coloring = greedy_color(g)
    origin = g.index_of_labels()
    cur = g
    for stage in PIPELINE:
        if recolor:
            stage_coloring = greedy_color(cur)
        elif cur is g:
            stage_coloring = coloring
        else:
            stage_coloring = coloring.restrict([origin[lbl] for lbl in cur.labels])
        cur, sub = stage(cur, k, stage_coloring)
        report.stages.extend(sub.stages)
    report.vertices_after = cur.num_vertices
    report.edges_after = cur.num_edges
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return cur, report
