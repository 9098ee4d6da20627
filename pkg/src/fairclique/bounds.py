"""Upper bounds on the largest fair clique inside a search instance.

Every bound takes a :class:`BoundContext` built on the subgraph induced by the
partial clique plus its candidates. A value ``b`` is sound when no
``(k, delta)``-fair clique of that subgraph has more than ``b`` vertices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .color import Coloring, build_oriented_dag, colorful_degrees, color_groups, greedy_color
from .graph import A, AttributedGraph, core_numbers


def pair_fair_cap(x: int, y: int, delta: int) -> int:
    """Largest |F| given |F_a| <= x, |F_b| <= y and a count gap of at most delta."""
    if abs(x - y) < delta:
        return x + y
    return 2 * min(x, y) + delta


@dataclass
class BoundContext:
    graph: AttributedGraph
    coloring: Coloring
    k: int
    delta: int

    @classmethod
    def build(cls, g: AttributedGraph, k: int, delta: int,
              coloring: Coloring | None = None) -> "BoundContext":
        if coloring is None:
            coloring = greedy_color(g)
        elif len(coloring.colors) != g.num_vertices:
            raise ValueError("coloring does not match the graph")
        return cls(g, coloring, k, delta)

    @property
    def count_a(self) -> int:
        return self.graph.count_a

    @property
    def count_b(self) -> int:
        return self.graph.count_b

    @cached_property
    def color_counts(self) -> tuple[int, int]:
        """Distinct colors on A-vertices and on B-vertices."""
        colors = self.coloring.colors
        seen = (set(), set())
        for v, x in enumerate(self.graph.attributes):
            seen[x].add(colors[v])
        return len(seen[0]), len(seen[1])

    @cached_property
    def groups(self) -> tuple[int, int, int]:
        colors = self.coloring.colors
        return color_groups((x, colors[v]) for v, x in enumerate(self.graph.attributes))

    @cached_property
    def colorful_degrees(self) -> tuple[list[int], list[int]]:
        return colorful_degrees(self.graph, self.coloring)

    @property
    def infeasible(self) -> bool:
        """True when one attribute is absent, so no fair clique exists (k >= 1)."""
        return self.k >= 1 and (self.count_a == 0 or self.count_b == 0)

    def vertex_cap(self, v: int) -> int:
        """Fair-clique size cap through ``v`` from its own colorful degrees."""
        da, db = self.colorful_degrees
        x, y = da[v], db[v]
        if self.graph.attributes[v] == A:
            x += 1
        else:
            y += 1
        return pair_fair_cap(x, y, self.delta)


@dataclass(frozen=True)
class BasicBounds:
    ub_s: int
    ub_a: int
    ub_c: int
    ub_ac: int
    ub_eac: int

    @property
    def ub_ad(self) -> int:
        return min(self.ub_s, self.ub_a, self.ub_c, self.ub_ac, self.ub_eac)

    def as_dict(self) -> dict[str, int]:
        return {"ub_s": self.ub_s, "ub_a": self.ub_a, "ub_c": self.ub_c,
                "ub_ac": self.ub_ac, "ub_eac": self.ub_eac, "ub_ad": self.ub_ad}


def ub_size(ctx: BoundContext) -> int:
    return ctx.graph.num_vertices


def ub_attribute(ctx: BoundContext) -> int:
    if ctx.infeasible:
        return 0
    return pair_fair_cap(ctx.count_a, ctx.count_b, ctx.delta)


def ub_color(ctx: BoundContext) -> int:
    return ctx.coloring.num_colors if ctx.graph.num_vertices else 0


def ub_attribute_color(ctx: BoundContext) -> int:
    if ctx.infeasible:
        return 0
    return pair_fair_cap(*ctx.color_counts, ctx.delta)


def ub_enhanced_attribute_color(ctx: BoundContext) -> int:
    """Cap from grouping colors by which attributes use them.

    The A side of a fair clique draws from A-only and mixed colors, the B side
    from B-only and mixed colors, and no color serves both sides.
    """
    if ctx.infeasible:
        return 0
    c_a, c_b, c_m = ctx.groups
    total = c_a + c_b + c_m
    return min(total, 2 * min(c_a + c_m, c_b + c_m, total // 2) + ctx.delta)


def ub_basic_group(ctx: BoundContext) -> BasicBounds:
    return BasicBounds(ub_size(ctx), ub_attribute(ctx), ub_color(ctx),
                       ub_attribute_color(ctx), ub_enhanced_attribute_color(ctx))


def h_index(values: Iterable[int]) -> int:
    """Largest h such that at least h of the values are >= h."""
    vals = sorted(values, reverse=True)
    h = 0
    while h < len(vals) and vals[h] >= h + 1:
        h += 1
    return h


@dataclass(frozen=True)
class DegreeBounds:
    degeneracy: int
    h_index: int

    @property
    def ub_deg(self) -> int:
        return self.degeneracy + 1

    @property
    def ub_h(self) -> int:
        return self.h_index + 1


def degeneracy_and_hindex(ctx: BoundContext) -> DegreeBounds:
    """A t-clique has degeneracy and h-index t-1, hence the +1 in both bounds."""
    g = ctx.graph
    if g.num_vertices == 0:
        return DegreeBounds(-1, -1)
    return DegreeBounds(max(core_numbers(g)), h_index(len(nb) for nb in g.adjacency))


@dataclass(frozen=True)
class ColorfulCoreDecomposition:
    core: tuple[int, ...]
    rank: tuple[int, ...]
    order: tuple[int, ...]

    @property
    def max_core(self) -> int:
        return max(self.core, default=0)


def colorful_core_decomposition(g: AttributedGraph, coloring: Coloring) -> ColorfulCoreDecomposition:
    """Peel the vertex of smallest min(D_a, D_b), ties by id; core = running max."""
    n = g.num_vertices
    colors = coloring.colors
    attrs = g.attributes
    tables: list[dict[int, list[int]]] = []
    dcount = []
    for nb in g.adjacency:
        table: dict[int, list[int]] = {}
        for w in nb:
            entry = table.get(colors[w])
            if entry is None:
                entry = table[colors[w]] = [0, 0]
            entry[attrs[w]] += 1
        tables.append(table)
        dcount.append([sum(1 for e in table.values() if e[0]), sum(1 for e in table.values() if e[1])])
    dmin = [min(d) for d in dcount]
    heap = [(dmin[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    core = [0] * n
    rank = [0] * n
    order = []
    level = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != dmin[v]:
            continue
        removed[v] = True
        level = max(level, d)
        core[v] = level
        rank[v] = len(order)
        order.append(v)
        cv, xv = colors[v], attrs[v]
        for w in g.adjacency[v]:
            if removed[w]:
                continue
            entry = tables[w][cv]
            entry[xv] -= 1
            if entry[xv] == 0:
                dcount[w][xv] -= 1
                nd = min(dcount[w])
                if nd != dmin[w]:
                    dmin[w] = nd
                    heapq.heappush(heap, (nd, w))
    return ColorfulCoreDecomposition(tuple(core), tuple(rank), tuple(order))


def ub_colorful_degeneracy(ctx: BoundContext) -> int:
    """Max over vertices of min(vertex cap, 2 * colorful core number + 2 + delta).

    A fair clique with minority count m sits in the colorful (m-1)-core, so
    each of its members has core number at least m-1.
    """
    if ctx.infeasible or ctx.graph.num_vertices == 0:
        return 0
    dec = colorful_core_decomposition(ctx.graph, ctx.coloring)
    two_d = 2 + ctx.delta
    return max(min(ctx.vertex_cap(v), 2 * c + two_d) for v, c in enumerate(dec.core))


def colorful_h_index(ctx: BoundContext) -> int:
    da, db = ctx.colorful_degrees
    return h_index(min(a, b) for a, b in zip(da, db))


def ub_colorful_h_index(ctx: BoundContext) -> int:
    """Like :func:`ub_colorful_degeneracy` with min(D_min(v), colorful h-index)."""
    if ctx.infeasible or ctx.graph.num_vertices == 0:
        return 0
    da, db = ctx.colorful_degrees
    hbar = colorful_h_index(ctx)
    two_d = 2 + ctx.delta
    return max(min(ctx.vertex_cap(v), 2 * min(a, b, hbar) + two_d)
               for v, (a, b) in enumerate(zip(da, db)))


def colorful_path_dp(g: AttributedGraph, coloring: Coloring) -> int:
    """Longest directed path (in vertices) of the color-ordered DAG."""
    if g.num_vertices == 0:
        return 0
    dag = build_oriented_dag(g, coloring)
    f = [1] * g.num_vertices
    for u in dag.order:
        best = 0
        for v in dag.in_neighbors[u]:
            if f[v] > best:
                best = f[v]
        f[u] = best + 1
    return max(f)


def ub_colorful_path(ctx: BoundContext) -> int:
    return colorful_path_dp(ctx.graph, ctx.coloring)


# -- configuration by name -----------------------------------------------------

BOUND_FUNCTIONS = {
    "size": ("ub_s", ub_size),
    "attr": ("ub_a", ub_attribute),
    "color": ("ub_c", ub_color),
    "attrcolor": ("ub_ac", ub_attribute_color),
    "enattrcolor": ("ub_eac", ub_enhanced_attribute_color),
    "degeneracy": ("ub_deg", lambda ctx: degeneracy_and_hindex(ctx).ub_deg),
    "hindex": ("ub_h", lambda ctx: degeneracy_and_hindex(ctx).ub_h),
    "cdeg": ("ub_cd", ub_colorful_degeneracy),
    "chindex": ("ub_ch", ub_colorful_h_index),
    "cpath": ("ub_cp", ub_colorful_path),
}
BOUND_NAMES = tuple(BOUND_FUNCTIONS)
AD_GROUP = ("size", "attr", "color", "attrcolor", "enattrcolor")
ADVANCED = ("degeneracy", "hindex", "cdeg", "chindex", "cpath")


def parse_bound_names(spec: str | Iterable[str]) -> tuple[str, ...]:
    """Expand a comma list (or iterable) of bound names; "ad" is the basic group.

    "none" or an empty string selects no bounds. Order is canonical and
    duplicates are dropped.
    """
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    chosen: set[str] = set()
    for raw in items:
        name = raw.strip().lower()
        if name in ("", "none"):
            continue
        if name == "ad":
            chosen.update(AD_GROUP)
        elif name in BOUND_FUNCTIONS:
            chosen.add(name)
        else:
            raise ValueError(f"unknown bound {raw.strip()!r}; choose from ad, "
                             + ", ".join(BOUND_NAMES))
    return tuple(n for n in BOUND_NAMES if n in chosen)


def evaluate_bounds(ctx: BoundContext, names: Iterable[str]) -> dict[str, int]:
    """Map each selected bound's output key (ub_s, ub_cd, ...) to its value."""
    out = {}
    for name in names:
        key, fn = BOUND_FUNCTIONS[name]
        out[key] = fn(ctx)
    return out


def combined_bound(ctx: BoundContext, names: Iterable[str]) -> int | None:
    """Minimum over the selected bounds, or None when none are selected."""
    vals = evaluate_bounds(ctx, names).values()
    return min(vals) if vals else None
