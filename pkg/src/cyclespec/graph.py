"""Bitset-backed undirected simple graphs.

Vertices are the integers 0..n-1.  The adjacency matrix is stored row-wise
as Python integers used as bit vectors, so neighbourhood operations
(intersection, union, popcount) cost one machine word per 64 vertices.
Graphs are immutable: every editing operation returns a fresh instance,
which makes values safe to share, hash, and use as dict keys.

The order is capped at 128 vertices; everything this library checks lives
at n <= 64 and the dense bit-matrix representation is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

MAX_ORDER = 128


class GraphError(ValueError):
    """Bad order, loop edge, or vertex index out of range."""


def _bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bit-vector rows."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at ({u}, {v})")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def _unsafe(cls, n: int, rows: tuple) -> "Graph":
        """Construct without validation (internal hot paths only)."""
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._hash = None
        return g

    # -- basic queries ---------------------------------------------------

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> tuple:
        return tuple(row.bit_count() for row in self.rows)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(row.bit_count() for row in self.rows)

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(row.bit_count() for row in self.rows)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v]

    def neighbors(self, v: int) -> tuple:
        return tuple(_bits(self.neighbors_mask(v)))

    def edges(self):
        """Yield edges as (u, v) pairs with u < v, lexicographically."""
        for u in range(self.n):
            high = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(high):
                yield (u, v)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    # -- edits (all return fresh graphs) ---------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._unsafe(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._unsafe(self.n, tuple(rows))

    def toggle_edge(self, u: int, v: int) -> "Graph":
        return self.remove_edge(u, v) if self.has_edge(u, v) else self.add_edge(u, v)

    def complement(self) -> "Graph":
        full = self.vertex_mask()
        rows = tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.rows))
        return Graph._unsafe(self.n, rows)

    def relabel(self, perm) -> "Graph":
        """Relabel vertices; ``perm[old]`` is the new label of ``old``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of 0..n-1")
        rows = [0] * self.n
        for old, row in enumerate(self.rows):
            new = perm[old]
            acc = 0
            for u in _bits(row):
                acc |= 1 << perm[u]
            rows[new] = acc
        return Graph._unsafe(self.n, tuple(rows))

    def induced_subgraph(self, vertices) -> "Graph":
        """Subgraph induced on ``vertices``, reindexed in sorted order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            acc = 0
            for u in _bits(self.rows[v]):
                if u in pos:
                    acc |= 1 << pos[u]
            rows.append(acc)
        return Graph._unsafe(len(keep), tuple(rows))

    def delete_vertex(self, v: int):
        """Delete ``v``; return (graph, index_map) with index_map[new] = old."""
        self._check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        return self.induced_subgraph(keep), tuple(keep)

    # -- connectivity ----------------------------------------------------

    def _component_masks(self) -> list:
        masks = []
        seen = 0
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                grow = 0
                for u in _bits(frontier):
                    grow |= self.rows[u]
                frontier = grow & ~comp
                comp |= frontier
            seen |= comp
            masks.append(comp)
        return masks

    def components(self) -> "ComponentDecomposition":
        blocks = tuple(tuple(_bits(m)) for m in self._component_masks())
        return ComponentDecomposition(blocks=blocks)

    def is_connected(self) -> bool:
        """Connected in the usual sense; the one-vertex graph counts as connected."""
        if self.n == 0:
            return False
        return len(self._component_masks()) == 1

    def cut_vertices(self) -> tuple:
        """Articulation vertices via iterative depth-first lowpoints."""
        n = self.n
        disc = [-1] * n
        low = [0] * n
        parent = [-1] * n
        cut = [False] * n
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            root_children = 0
            stack = [(root, iter(_bits(self.rows[root])))]
            disc[root] = low[root] = timer
            timer += 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for u in it:
                    if disc[u] == -1:
                        parent[u] = v
                        if v == root:
                            root_children += 1
                        disc[u] = low[u] = timer
                        timer += 1
                        stack.append((u, iter(_bits(self.rows[u]))))
                        advanced = True
                        break
                    elif u != parent[v]:
                        low[v] = min(low[v], disc[u])
                if not advanced:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if p != root and low[v] >= disc[p]:
                            cut[p] = True
            if root_children >= 2:
                cut[root] = True
        return tuple(v for v in range(n) if cut[v])

    def is_2connected(self) -> bool:
        return self.n >= 3 and self.is_connected() and not self.cut_vertices()

    # -- cliques -----------------------------------------------------------

    def clique_number(self) -> int:
        return len(self.max_clique())

    def max_clique(self) -> tuple:
        """The lexicographically least maximum clique (deterministic)."""
        if self.n == 0:
            return ()
        rows = self.rows
        omega = _max_clique_size(rows, self.vertex_mask())
        chosen = []
        cand = self.vertex_mask()
        for _ in range(omega):
            for v in _bits(cand):
                rest = cand & rows[v] & ~((1 << (v + 1)) - 1)
                if _max_clique_size(rows, rest) >= omega - len(chosen) - 1:
                    chosen.append(v)
                    cand = rest
                    break
        return tuple(chosen)

    # -- conversions -------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for v, row in enumerate(self.rows):
            for u in _bits(row):
                a[v, u] = 1.0
        return a

    def to_graph6(self) -> str:
        return graph6_encode(self)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components as a partition of 0..n-1."""

    blocks: tuple

    @property
    def count(self) -> int:
        return len(self.blocks)


# -- constructors ---------------------------------------------------------


def build(order: int, edges) -> Graph:
    """Graph with the given order and edge list (duplicates collapsed)."""
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside [1, {MAX_ORDER}]")
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._unsafe(order, tuple(rows))


def empty_graph(n: int) -> Graph:
    """Edgeless graph; n = 0 is allowed as the join/union identity."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
    return Graph._unsafe(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
    full = (1 << n) - 1
    return Graph._unsafe(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return build(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0 or a + b > MAX_ORDER or a + b < 1:
        raise GraphError(f"invalid bipartition sizes ({a}, {b})")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    mask1 = g1.vertex_mask()
    mask2 = g2.vertex_mask() << g1.n
    rows = [row | mask2 for row in g1.rows]
    rows += [(row << g1.n) | mask1 for row in g2.rows]
    return Graph._unsafe(n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    rows = list(g1.rows) + [row << g1.n for row in g2.rows]
    return Graph._unsafe(n, tuple(rows))


# -- maximum clique core ----------------------------------------------------


def _greedy_color_order(rows, cand: int):
    """Greedy colouring of the candidate set.

    Returns (order, bounds) where vertices are listed colour class by colour
    class and bounds[i] is the colour count after placing order[i]; scanning
    the order backwards gives the usual branch-and-bound pruning sequence.
    """
    order = []
    bounds = []
    color = 0
    remaining = cand
    while remaining:
        color += 1
        avail = remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            bounds.append(color)
            avail &= ~(rows[v] | (1 << v))
            remaining &= ~(1 << v)
    return order, bounds


def _max_clique_size(rows, cand: int) -> int:
    """Exact maximum clique size within the candidate mask."""
    best = 0

    def expand(cand_mask: int, size: int) -> None:
        nonlocal best
        order, bounds = _greedy_color_order(rows, cand_mask)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            if size + 1 > best:
                best = size + 1
            nxt = cand_mask & rows[v]
            if nxt:
                expand(nxt, size + 1)
            cand_mask &= ~(1 << v)

    if cand:
        expand(cand, 0)
    return best


# -- graph6 codec -----------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Encode in the standard graph6 format (6-bit packed upper triangle)."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    else:
        header = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    bits = []
    for col in range(1, n):
        colbit = 1 << col
        for row in range(col):
            bits.append(1 if g.rows[row] & colbit else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value << 1 | b
        chunks.append(chr(value + 63))
    return header + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 line; strict about length and character range."""
    text = text.strip()
    if not text:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in text]
    if any(d < 0 or d > 63 for d in data):
        raise GraphError("graph6 characters must be in the range 63..126")
    if data[0] == 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 order header")
        if data[1] == 63:
            raise GraphError("graph6 orders beyond 258047 are not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_ORDER:
        raise GraphError(f"decoded order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}"
        )
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    tail = idx
    while tail < len(body) * 6:
        if body[tail // 6] >> (5 - tail % 6) & 1:
            raise GraphError("graph6 padding bits must be zero")
        tail += 1
    return Graph._unsafe(n, tuple(rows))


def all_labeled_graphs(n: int):
    """Yield every labeled graph on n vertices (2^C(n,2) of them)."""
    if not 1 <= n <= 8:
        raise GraphError("labeled enumeration is limited to n <= 8")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        c = code
        while c:
            low = c & -c
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            c ^= low
        yield Graph._unsafe(n, tuple(rows))
