"""Brute-force reference answers for small graphs.

Any subset of a clique is a clique, so the best fair clique inside a maximal
clique depends only on its two attribute counts. Enumerating every maximal
clique therefore gives the exact optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import A, AttributedGraph, VertexSet

DEFAULT_SIZE_LIMIT = 60


class OracleSizeError(ValueError):
    """The instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: VertexSet
    maximal_cliques: int


def max_fair_in_clique(count_a: int, count_b: int, k: int, delta: int) -> int:
    lo, hi = min(count_a, count_b), max(count_a, count_b)
    if lo < k:
        return 0
    return lo + min(hi, lo + delta)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: AttributedGraph):
    """Yield maximal cliques as bitmasks (pivoted Bron-Kerbosch)."""
    adj = g.adjacency_masks
    if g.num_vertices == 0:
        return
    stack = [(0, (1 << g.num_vertices) - 1, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        px = p | x
        pivot = max(_bits(px), key=lambda u: (adj[u] & p).bit_count())
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            stack.append((r | bit, p & adj[v], x & adj[v]))
            p &= ~bit
            x |= bit


def oracle_max_fair_clique(g: AttributedGraph, k: int, delta: int,
                           size_limit: int | None = DEFAULT_SIZE_LIMIT) -> OracleResult:
    if size_limit is not None and g.num_vertices > size_limit:
        raise OracleSizeError(f"oracle limited to {size_limit} vertices, got {g.num_vertices}")
    if k < 1 or delta < 0:
        raise ValueError("need k >= 1 and delta >= 0")
    b_mask = 0
    for v, x in enumerate(g.attributes):
        if x != A:
            b_mask |= 1 << v
    best, best_clique, seen = 0, 0, 0
    for clique in maximal_cliques(g):
        seen += 1
        cb = (clique & b_mask).bit_count()
        value = max_fair_in_clique(clique.bit_count() - cb, cb, k, delta)
        if value > best:
            best, best_clique = value, clique
    witness = g.vertex_set(())
    if best:
        members = list(_bits(best_clique))
        side_a = [v for v in members if g.attributes[v] == A]
        side_b = [v for v in members if g.attributes[v] != A]
        minority, majority = (side_a, side_b) if len(side_a) <= len(side_b) else (side_b, side_a)
        keep = minority + majority[:best - len(minority)]
        witness = g.vertex_set(keep)
    return OracleResult(best, witness, seen)
