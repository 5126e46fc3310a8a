"""Degree-sum closure and the Kelmans rewiring operation.

The closure repeatedly joins nonadjacent vertex pairs whose degree sum
meets a threshold (classically the order n, under which the circumference
is preserved).  The fixed point is independent of processing order; the
implementation rescans from the lexicographically first pair after every
insertion so the recorded trace is deterministic.

The Kelmans operation G[u -> v] moves every edge uw with
w in N(u) \\ (N(v) u {v}) to vw.  It preserves the order and the edge
count exactly and never decreases the spectral radius or the signless
Laplacian radius.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, _bits


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    added: tuple  # (u, v) pairs in insertion order
    parameter: int


def closure(g: Graph, threshold: int) -> ClosureResult:
    """Fixed point of joining nonadjacent pairs with degree sum >= threshold."""
    if threshold < 1:
        raise GraphError("closure threshold must be at least 1")
    rows = list(g.rows)
    n = g.n
    degs = [row.bit_count() for row in rows]
    added = []
    restart = True
    while restart:
        restart = False
        for u in range(n):
            if restart:
                break
            for v in range(u + 1, n):
                if rows[u] >> v & 1:
                    continue
                if degs[u] + degs[v] >= threshold:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    degs[u] += 1
                    degs[v] += 1
                    added.append((u, v))
                    restart = True
                    break
    return ClosureResult(
        graph=Graph._unsafe(n, tuple(rows)),
        added=tuple(added),
        parameter=threshold,
    )


def kelmans(g: Graph, u: int, v: int) -> Graph:
    """Rewire the edges uw with w in N(u) \\ (N(v) u {v}) to vw.

    The edge uv, when present, stays in place; u is kept as a vertex even
    if it ends up isolated, so the order is preserved.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("the two vertices must be distinct")
    moved = g.rows[u] & ~(g.rows[v] | (1 << v))
    rows = list(g.rows)
    for w in _bits(moved):
        rows[u] &= ~(1 << w)
        rows[w] &= ~(1 << u)
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph._unsafe(g.n, tuple(rows))
