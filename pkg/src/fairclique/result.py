"""The fairness predicate and the result record returned by every solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import AttributedGraph, VertexSet

EXACT = "exact"
HEURISTIC = "heuristic"
ORACLE = "oracle"


def is_fair_counts(count_a: int, count_b: int, k: int, delta: int) -> bool:
    return count_a >= k and count_b >= k and abs(count_a - count_b) <= delta


def verify_fair_clique(g: AttributedGraph, s: VertexSet | Iterable[int], k: int, delta: int) -> bool:
    """True iff ``s`` is a clique of ``g`` with a (k, delta)-fair attribute split."""
    vs = s if isinstance(s, VertexSet) else VertexSet.of(g, s)
    for v in vs.members:
        if not 0 <= v < g.num_vertices:
            raise IndexError(f"vertex id {v} out of range for n={g.num_vertices}")
    return is_fair_counts(vs.count_a, vs.count_b, k, delta) and g.is_clique(vs.members)


@dataclass
class FairCliqueResult:
    vertices: VertexSet
    k: int
    delta: int
    provenance: str
    nodes: int = 0
    elapsed_ms: float = 0.0
    optimal: bool = True
    phases_ms: dict[str, float] = field(default_factory=dict)
    reduction: object | None = None  # ReductionReport when the search reduced the graph
    improvements: list[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def count_a(self) -> int:
        return self.vertices.count_a

    @property
    def count_b(self) -> int:
        return self.vertices.count_b

    @property
    def empty(self) -> bool:
        return self.size == 0

    def is_valid(self, g: AttributedGraph) -> bool:
        return self.empty or verify_fair_clique(g, self.vertices, self.k, self.delta)

    @classmethod
    def none(cls, g: AttributedGraph, k: int, delta: int, provenance: str) -> "FairCliqueResult":
        return cls(g.vertex_set(()), k, delta, provenance)
