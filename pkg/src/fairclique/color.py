"""Greedy vertex coloring plus the color-ordered DAG built on top of it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import A, AttributedGraph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    num_colors: int

    def is_proper(self, g: AttributedGraph) -> bool:
        c = self.colors
        return all(c[u] != c[v] for u, v in g.edges())

    def restrict(self, mapping) -> "Coloring":
        """Coloring of an induced subgraph given ``mapping[new] = old``; ids re-compacted."""
        return compact([self.colors[v] for v in mapping])


def compact(colors: Iterable[int]) -> Coloring:
    colors = list(colors)
    remap: dict[int, int] = {}
    for c in sorted(set(colors)):
        remap[c] = len(remap)
    return Coloring(tuple(remap[c] for c in colors), len(remap))


def degree_order(g: AttributedGraph) -> list[int]:
    """Non-increasing degree, ties broken by ascending id."""
    adj = g.adjacency
    return sorted(range(g.num_vertices), key=lambda v: (-len(adj[v]), v))


def greedy_color(g: AttributedGraph) -> Coloring:
    """Smallest free color per vertex, visiting vertices by decreasing degree."""
    n = g.num_vertices
    colors = [-1] * n
    adj = g.adjacency
    num = 0
    for v in degree_order(g):
        used = {colors[w] for w in adj[v]}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
        if c >= num:
            num = c + 1
    return Coloring(tuple(colors), num)


@dataclass(frozen=True)
class OrientedGraph:
    out_neighbors: tuple[tuple[int, ...], ...]
    in_neighbors: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # vertices sorted by (color, id)

    @property
    def num_vertices(self) -> int:
        return len(self.order)


def precedes_key(coloring: Coloring):
    colors = coloring.colors
    return lambda v: (colors[v], v)


def build_oriented_dag(g: AttributedGraph, coloring: Coloring) -> OrientedGraph:
    """Orient every edge from the (color, id)-smaller endpoint to the larger one."""
    colors = coloring.colors
    if len(colors) != g.num_vertices:
        raise ValueError("coloring does not match the graph")
    order = sorted(range(g.num_vertices), key=precedes_key(coloring))
    outs: list[list[int]] = [[] for _ in range(g.num_vertices)]
    ins: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise ValueError(f"improper coloring: edge ({u}, {v}) is monochromatic")
        if (colors[u], u) < (colors[v], v):
            outs[u].append(v)
            ins[v].append(u)
        else:
            outs[v].append(u)
            ins[u].append(v)
    # edges() yields in (u asc, v asc), so in-lists are sorted already; out-lists are not
    return OrientedGraph(tuple(tuple(sorted(o)) for o in outs),
                         tuple(tuple(sorted(i)) for i in ins),
                         tuple(order))


def colorful_degrees(g: AttributedGraph, coloring: Coloring) -> tuple[list[int], list[int]]:
    """Per vertex, the number of distinct colors among its A-neighbours and B-neighbours."""
    colors = coloring.colors
    attrs = g.attributes
    da, db = [], []
    for nb in g.adjacency:
        seen_a = set()
        seen_b = set()
        for w in nb:
            if attrs[w] == A:
                seen_a.add(colors[w])
            else:
                seen_b.add(colors[w])
        da.append(len(seen_a))
        db.append(len(seen_b))
    return da, db


def color_groups(pairs: Iterable[tuple[int, int]]) -> tuple[int, int, int]:
    """Split colors into single-attribute groups and a mixed group.

    ``pairs`` yields ``(attribute, color)`` for each vertex considered.
    Returns ``(c_a, c_b, c_m)``.
    """
    seen: dict[int, int] = {}
    for attr, c in pairs:
        seen[c] = seen.get(c, 0) | (1 << attr)
    c_a = c_b = c_m = 0
    for bits in seen.values():
        if bits == 3:
            c_m += 1
        elif bits == 1:
            c_a += 1
        else:
            c_b += 1
    return c_a, c_b, c_m


def read_coloring(path, g: AttributedGraph) -> Coloring:
    """Parse "vertex color" lines; every vertex needs a color and the result must be proper."""
    from .graph import GraphFormatError, _data_lines, _parse_pair

    colors: list[int | None] = [None] * g.num_vertices
    for lineno, tokens, _ in _data_lines(path):
        if tokens is None:
            continue
        v, c = _parse_pair(tokens, path, lineno)
        if not 0 <= v < g.num_vertices:
            raise GraphFormatError(f"color for unknown vertex {v}", path, lineno)
        if c < 0:
            raise GraphFormatError("negative color id", path, lineno)
        colors[v] = c
    if any(c is None for c in colors):
        raise GraphFormatError("some vertices have no color", path)
    coloring = compact(colors)  # type: ignore[arg-type]
    if not coloring.is_proper(g):
        raise GraphFormatError("coloring is not proper", path)
    return coloring
