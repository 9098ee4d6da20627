"""Two-attribute undirected graphs together with loading and peeling helpers.

Vertices are dense integers ``0..n-1``. Every vertex carries one of two
attributes, stored as ``A = 0`` / ``B = 1``. Graphs are never mutated after
construction; every operation that drops vertices returns a new graph whose
``labels`` still name the vertices of the graph it was derived from.
"""

from __future__ import annotations

import logging
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)

A = 0
B = 1
ATTR_NAMES = ("A", "B")

_COMMENT_PREFIXES = ("#", "%")
_VERTEX_HEADER = "vertices"
_FROZEN_FIELDS = frozenset({"num_vertices", "num_edges", "adjacency", "attributes", "labels"})


class GraphFormatError(ValueError):
    """Raised for malformed edge or attribute files."""

    def __init__(self, message: str, path: str | os.PathLike | None = None,
                 line: int | None = None):
        where = ""
        if path is not None:
            where = f"{os.fspath(path)}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)
        self.path = path
        self.line = line


@dataclass(frozen=True)
class VertexSet:
    """Sorted vertex ids together with their per-attribute counts."""

    members: tuple[int, ...]
    count_a: int
    count_b: int

    @classmethod
    def of(cls, g: "AttributedGraph", members: Iterable[int]) -> "VertexSet":
        ms = tuple(sorted(set(members)))
        for v in ms:
            if not 0 <= v < g.num_vertices:
                raise IndexError(f"vertex id {v} out of range for n={g.num_vertices}")
        cb = sum(g.attributes[v] for v in ms)
        return cls(ms, len(ms) - cb, cb)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


class AttributedGraph:
    """Immutable simple undirected graph with a binary attribute per vertex.

    ``adjacency[v]`` is the strictly increasing tuple of neighbours of ``v``.
    ``labels[v]`` is the id of ``v`` in the graph this one was derived from
    (identity for loaded or generated graphs).
    """

    def __init__(self, adjacency: Sequence[Sequence[int]], attributes: Sequence[int],
                 labels: Sequence[int] | None = None, *, check: bool = True):
        adjacency = tuple(tuple(nb) for nb in adjacency)
        attributes = tuple(int(x) for x in attributes)
        n = len(adjacency)
        if len(attributes) != n:
            raise ValueError(f"{len(attributes)} attributes for {n} vertices")
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError(f"{len(labels)} labels for {n} vertices")
        if check:
            _check_invariants(adjacency, attributes)
        object.__setattr__(self, "num_vertices", n)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "num_edges", sum(len(nb) for nb in adjacency) // 2)

    def __setattr__(self, name, value):
        if name in _FROZEN_FIELDS:
            raise AttributeError("AttributedGraph is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        return (f"AttributedGraph(n={self.num_vertices}, m={self.num_edges}, "
                f"a={self.count_a}, b={self.count_b})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AttributedGraph):
            return NotImplemented
        return self.adjacency == other.adjacency and self.attributes == other.attributes

    def __hash__(self) -> int:
        return hash((self.adjacency, self.attributes))

    @classmethod
    def from_edges(cls, num_vertices: int, edges, attributes: Sequence[int],
                   labels: Sequence[int] | None = None) -> "AttributedGraph":
        """Build from an edge list, silently dropping self-loops and repeats."""
        adjacency, _, _ = _adjacency_from_edges(num_vertices, edges)
        return cls(adjacency, attributes, labels, check=False)

    # -- basic queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self):
        """Yield each undirected edge once as ``(u, v)`` with ``u < v``."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v > u:
                    yield u, v

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as Python-int bitsets."""
        out = []
        for nb in self.adjacency:
            m = 0
            for w in nb:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @cached_property
    def count_b(self) -> int:
        return sum(self.attributes)

    @property
    def count_a(self) -> int:
        return self.num_vertices - self.count_b

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adjacency), default=0)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self, members)

    def is_clique(self, members: Iterable[int]) -> bool:
        ms = list(members)
        sets = self.neighbor_sets
        for i, u in enumerate(ms):
            nu = sets[u]
            for v in ms[i + 1:]:
                if v not in nu:
                    return False
        return True

    def index_of_labels(self) -> dict[int, int]:
        return {lbl: v for v, lbl in enumerate(self.labels)}

    def with_attributes(self, attributes: Sequence[int]) -> "AttributedGraph":
        attributes = tuple(int(x) for x in attributes)
        if len(attributes) != self.num_vertices or any(x not in (A, B) for x in attributes):
            raise ValueError("attribute vector must hold one 0/1 value per vertex")
        return AttributedGraph(self.adjacency, attributes, self.labels, check=False)


def _check_invariants(adjacency, attributes) -> None:
    n = len(adjacency)
    for v, x in enumerate(attributes):
        if x not in (A, B):
            raise ValueError(f"vertex {v} has attribute {x!r}, expected 0 or 1")
    for u, nb in enumerate(adjacency):
        prev = -1
        for v in nb:
            if not 0 <= v < n:
                raise ValueError(f"neighbour {v} of {u} out of range")
            if v == u:
                raise ValueError(f"self-loop at {u}")
            if v <= prev:
                raise ValueError(f"neighbour list of {u} is not strictly increasing")
            prev = v
    sets = [set(nb) for nb in adjacency]
    for u, nb in enumerate(adjacency):
        for v in nb:
            if u not in sets[v]:
                raise ValueError(f"edge ({u}, {v}) is not symmetric")


def _adjacency_from_edges(n: int, edges) -> tuple[list[list[int]], int, int]:
    """CSR-style build. Returns (adjacency, self_loops_dropped, duplicates_dropped)."""
    if not isinstance(edges, np.ndarray):
        edges = list(edges)
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError("edge endpoint out of range")
    loops = arr[:, 0] == arr[:, 1]
    n_loops = int(loops.sum())
    arr = arr[~loops]
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keys = np.unique(lo * n + hi) if arr.size else np.empty(0, dtype=np.int64)
    n_dups = int(len(arr) - len(keys))
    lo, hi = keys // max(n, 1), keys % max(n, 1)
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=n)
    splits = np.cumsum(counts)[:-1]
    adjacency = [part.tolist() for part in np.split(dst, splits)] if n else []
    return adjacency, n_loops, n_dups


# -- file I/O --------------------------------------------------------------


@dataclass
class LoadReport:
    num_vertices: int
    num_edges: int
    self_loops_dropped: int
    duplicates_dropped: int


def _data_lines(path):
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(_COMMENT_PREFIXES):
                yield lineno, None, line
                continue
            yield lineno, line.split(), line


def _parse_pair(tokens, path, lineno) -> tuple[int, int]:
    if len(tokens) != 2:
        raise GraphFormatError(f"expected two integers, got {len(tokens)} tokens", path, lineno)
    try:
        a, b = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphFormatError(f"non-integer token in {' '.join(tokens)!r}", path, lineno) from None
    return a, b


def read_edge_list(path) -> tuple[int, list[tuple[int, int]]]:
    """Parse an edge file. Returns (declared or inferred vertex count, edges)."""
    edges: list[tuple[int, int]] = []
    declared = None
    for lineno, tokens, line in _data_lines(path):
        if tokens is None:
            words = line[1:].split()
            if len(words) == 2 and words[0] == _VERTEX_HEADER and words[1].isdigit():
                declared = int(words[1])
            continue
        u, v = _parse_pair(tokens, path, lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", path, lineno)
        edges.append((u, v))
    n = 1 + max((max(e) for e in edges), default=-1)
    if declared is not None:
        if declared < n:
            raise GraphFormatError(f"header declares {declared} vertices but ids reach {n - 1}", path)
        n = declared
    return n, edges


def read_attributes(path, num_vertices: int) -> list[int]:
    attrs: list[int | None] = [None] * num_vertices
    for lineno, tokens, _ in _data_lines(path):
        if tokens is None:
            continue
        v, x = _parse_pair(tokens, path, lineno)
        if x not in (A, B):
            raise GraphFormatError(f"attribute {x} outside {{0,1}}", path, lineno)
        if not 0 <= v < num_vertices:
            raise GraphFormatError(f"attribute for unknown vertex {v}", path, lineno)
        if attrs[v] is not None and attrs[v] != x:
            raise GraphFormatError(f"conflicting attributes for vertex {v}", path, lineno)
        attrs[v] = x
    missing = [v for v, x in enumerate(attrs) if x is None]
    if missing:
        raise GraphFormatError(
            f"{len(missing)} vertices have no attribute (first: {missing[0]})", path)
    return attrs  # type: ignore[return-value]


def load_graph_with_report(edge_path, attr_path=None, seed: int | None = None):
    n, edges = read_edge_list(edge_path)
    adjacency, loops, dups = _adjacency_from_edges(n, edges)
    if attr_path is not None:
        attrs = read_attributes(attr_path, n)
    elif seed is not None:
        attrs = random_attributes(n, seed)
    else:
        raise ValueError("either an attribute file or a seed is required")
    g = AttributedGraph(adjacency, attrs, check=False)
    if loops or dups:
        logger.warning("%s: dropped %d self-loops and %d duplicate edges",
                       os.fspath(edge_path), loops, dups)
    return g, LoadReport(n, g.num_edges, loops, dups)


def load_graph(edge_path, attr_path=None, seed: int | None = None) -> AttributedGraph:
    """Read an edge list and an attribute file (or draw attributes from ``seed``)."""
    return load_graph_with_report(edge_path, attr_path, seed)[0]


def write_edge_list(g: AttributedGraph, path, *, use_labels: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if not use_labels:
            fh.write(f"# {_VERTEX_HEADER} {g.num_vertices}\n")
        name = g.labels if use_labels else range(g.num_vertices)
        for u, v in g.edges():
            fh.write(f"{name[u]} {name[v]}\n")


def write_attributes(g: AttributedGraph, path, *, use_labels: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v, x in enumerate(g.attributes):
            fh.write(f"{g.labels[v] if use_labels else v} {x}\n")


# -- generators ------------------------------------------------------------


def random_attributes(n: int, seed: int) -> list[int]:
    if n == 0:
        return []
    return np.random.default_rng(seed).integers(0, 2, size=n).tolist()


def assign_random_attributes(g: AttributedGraph, seed: int) -> AttributedGraph:
    """Relabel every vertex A or B with probability 1/2 each, reproducibly."""
    return g.with_attributes(random_attributes(g.num_vertices, seed))


def gnp_random_graph(n: int, p: float, seed: int) -> AttributedGraph:
    """Erdos-Renyi G(n, p) with seeded random attributes."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    edges = np.stack([iu[keep], ju[keep]], axis=1)
    attrs = rng.integers(0, 2, size=n).tolist() if n else []
    return AttributedGraph.from_edges(n, edges, attrs)


def gnm_random_graph(n: int, m: int, seed: int) -> AttributedGraph:
    """Uniform random graph with exactly ``m`` edges, for large sparse instances."""
    max_m = n * (n - 1) // 2
    if m > max_m:
        raise ValueError(f"{m} edges do not fit in {n} vertices")
    rng = np.random.default_rng(seed)
    keys = np.empty(0, dtype=np.int64)
    while len(keys) < m:
        need = int((m - len(keys)) * 1.1) + 16
        u = rng.integers(0, n, size=need)
        v = rng.integers(0, n, size=need)
        ok = u != v
        lo, hi = np.minimum(u[ok], v[ok]), np.maximum(u[ok], v[ok])
        keys = np.unique(np.concatenate([keys, lo * n + hi]))
    keys = rng.permutation(keys)[:m]
    edges = np.stack([keys // n, keys % n], axis=1)
    attrs = rng.integers(0, 2, size=n).tolist()
    return AttributedGraph.from_edges(n, edges, attrs)


# -- structure -------------------------------------------------------------


def induced_subgraph(g: AttributedGraph, s) -> tuple[AttributedGraph, tuple[int, ...]]:
    """Subgraph on ``s``; returns it with ``mapping[new_id] = old_id``."""
    members = s.members if isinstance(s, VertexSet) else tuple(sorted(set(s)))
    n = g.num_vertices
    if len(members) == n and (not n or (members[0] == 0 and members[-1] == n - 1)):
        return g, members  # graphs are immutable, so the whole graph can be shared
    pos = [-1] * n
    for i, v in enumerate(members):
        if not 0 <= v < n:
            raise IndexError(f"vertex id {v} out of range for n={n}")
        pos[v] = i
    adjacency = []
    for v in members:
        adjacency.append([pos[w] for w in g.adjacency[v] if pos[w] >= 0])
    attrs = [g.attributes[v] for v in members]
    labels = [g.labels[v] for v in members]
    return AttributedGraph(adjacency, attrs, labels, check=False), tuple(members)


def connected_components(g: AttributedGraph) -> list[VertexSet]:
    seen = [False] * g.num_vertices
    comps = []
    for s in range(g.num_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(g.vertex_set(comp))
    return comps


def k_core_members(g: AttributedGraph, k: int) -> list[int]:
    if k < 0:
        raise ValueError("k must be non-negative")
    deg = [len(nb) for nb in g.adjacency]
    removed = [False] * g.num_vertices
    stack = [v for v, d in enumerate(deg) if d < k]
    for v in stack:
        removed[v] = True
    adjacency = g.adjacency
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] < k:
                    removed[w] = True
                    stack.append(w)
    return [v for v in range(g.num_vertices) if not removed[v]]


def k_core(g: AttributedGraph, k: int) -> AttributedGraph:
    """Maximal subgraph with minimum degree >= k (labels keep the old ids)."""
    return induced_subgraph(g, k_core_members(g, k))[0]


def core_numbers(g: AttributedGraph) -> list[int]:
    """Batagelj-Zaversnik bucket peeling."""
    n = g.num_vertices
    if n == 0:
        return []
    deg = [len(nb) for nb in g.adjacency]
    md = max(deg)
    bins = [0] * (md + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(md + 1):
        bins[d], start = start, start + bins[d]
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    for i in range(n):
        v = vert[i]
        for u in g.adjacency[v]:
            if deg[u] > deg[v]:
                du, pu = deg[u], pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], vert[pu] = pw, w
                    pos[w], vert[pw] = pu, u
                bins[du] += 1
                deg[u] -= 1
    return deg
