"""Constructors, edge formulas, and membership tests for the extremal families.

Families (all on n labeled vertices):

* ``L(n, k)``            -- K_1 v (K_{n-k-1} + K_k), one dominating vertex over
                            a big clique and a small clique; ``L(n, 0) = K_n``.
* ``gamma_t(n, t)``      -- K_2 v (K_{n-t-2} + t K_1), a dominating pair over a
                            clique plus t independent vertices.
* ``woodall_gamma(n, k)``-- cliques of sizes n-k-1 and k+2 sharing one vertex;
                            one edge below the large-cycle edge threshold.
* ``s_nk(n, k)``         -- K_k v (n-k) K_1, and ``s_nk_plus`` adds one edge
                            between two of the independent vertices.
* ``turan2(n)``          -- the balanced complete bipartite graph.

``is_subgraph_of_F(G, k)`` decides whether G is a spanning subgraph of some
graph built from an (n-k)-clique with outside clique components each
attached to a single clique vertex; the decision enumerates the C(n, k)
choices of the k outside vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .canon import isomorphic
from .graph import (
    Graph,
    GraphError,
    _bits,
    complete_bipartite,
    complete_graph,
    disjoint_union,
    empty_graph,
    join,
)

F_SEARCH_MAX_K = 12


def L(n: int, k: int) -> Graph:
    """K_1 v (K_{n-k-1} + K_k); vertex 0 is the dominating (cut) vertex."""
    if k < 0 or n < k + 2:
        raise GraphError(f"L({n}, {k}) needs k >= 0 and n >= k + 2")
    return join(complete_graph(1), disjoint_union(complete_graph(n - k - 1), complete_graph(k)))


def gamma_t(n: int, t: int) -> Graph:
    """K_2 v (K_{n-t-2} + t K_1); vertices 0, 1 are the dominating pair."""
    if t < 1 or n < t + 3:
        raise GraphError(f"gamma_t({n}, {t}) needs t >= 1 and n >= t + 3")
    return join(complete_graph(2), disjoint_union(complete_graph(n - t - 2), empty_graph(t)))


def woodall_gamma(n: int, k: int) -> Graph:
    """Cliques of sizes n-k-1 and k+2 sharing exactly vertex 0."""
    if k < 0 or n < 2 * k + 3:
        raise GraphError(f"woodall_gamma({n}, {k}) needs k >= 0 and n >= 2k + 3")
    big = n - k - 1
    edges = [(u, v) for u, v in combinations(range(big), 2)]
    second = [0] + list(range(big, n))
    edges += [(u, v) for u, v in combinations(second, 2)]
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._unsafe(n, tuple(rows))


def s_nk(n: int, k: int) -> Graph:
    """K_k v (n-k) K_1."""
    if k < 1 or n <= k:
        raise GraphError(f"s_nk({n}, {k}) needs n > k >= 1")
    return join(complete_graph(k), empty_graph(n - k))


def s_nk_plus(n: int, k: int) -> Graph:
    """s_nk(n, k) plus one edge between two of the independent vertices."""
    if k < 1 or n - k < 2:
        raise GraphError(f"s_nk_plus({n}, {k}) needs n - k >= 2 and k >= 1")
    return s_nk(n, k).add_edge(k, k + 1)


def turan2(n: int) -> Graph:
    """Balanced complete bipartite graph on n vertices."""
    if n < 2:
        raise GraphError("turan2 needs n >= 2")
    return complete_bipartite((n + 1) // 2, n // 2)


@dataclass(frozen=True)
class Thresholds:
    """The five edge thresholds at (n, k), as exact rationals.

    woodall:    above it every cycle length in [3, n-k] is forced.
    refined:    woodall - 1; forces the same range except one graph.
    stability:  the weaker bound under which the structure theorem applies.
    even_cycle: max edges given no even cycle longer than 2k (half-integral).
    ore:        max edges of a non-hamiltonian graph.
    """

    woodall: int
    refined: int
    stability: int
    even_cycle: Fraction
    ore: int


def thresholds(n: int, k: int) -> Thresholds:
    if k < 0 or n < k + 3:
        raise GraphError(f"thresholds({n}, {k}) needs k >= 0 and n >= k + 3")
    refined = comb(n - k - 1, 2) + comb(k + 2, 2)
    return Thresholds(
        woodall=refined + 1,
        refined=refined,
        stability=comb(n - k - 2, 2) + comb(k + 3, 2),
        even_cycle=Fraction((2 * k + 1) * (n - 1), 2),
        ore=comb(n - 1, 2) + 1,
    )


# -- family membership ------------------------------------------------------


@dataclass(frozen=True)
class FMembership:
    """Outcome of the spanning-subgraph test against the clique-anchor family."""

    is_member: bool
    outside: tuple | None  # the k vertices outside the clique part, if found


def is_subgraph_of_F(g: Graph, k: int) -> FMembership:
    """Is G a spanning subgraph of some member of the (n, k) family?

    Equivalent decision: does there exist a set S of n - k vertices such
    that every component of G - S has at most one neighbour inside S?
    (Complete S, complete each outside component, and attach it to its
    unique anchor to exhibit the member.)
    """
    if g.n < k + 1:
        raise GraphError(f"order {g.n} too small for k = {k}")
    if k > F_SEARCH_MAX_K:
        raise GraphError(f"k = {k} exceeds the enumeration bound {F_SEARCH_MAX_K}")
    if k == 0:
        return FMembership(is_member=True, outside=())
    rows = g.rows
    full = g.vertex_mask()
    for outside in combinations(range(g.n), k):
        out_mask = 0
        for v in outside:
            out_mask |= 1 << v
        s_mask = full & ~out_mask
        ok = True
        seen = 0
        for v in outside:
            bit = 1 << v
            if seen & bit:
                continue
            comp = bit
            frontier = bit
            while frontier:
                grow = 0
                for u in _bits(frontier):
                    grow |= rows[u]
                frontier = grow & out_mask & ~comp
                comp |= frontier
            seen |= comp
            anchors = 0
            for u in _bits(comp):
                anchors |= rows[u] & s_mask
            if anchors.bit_count() > 1:
                ok = False
                break
        if ok:
            return FMembership(is_member=True, outside=outside)
    return FMembership(is_member=False, outside=None)


def fits_inside_gamma2(g: Graph) -> bool:
    """Is G a spanning subgraph of gamma_t(n, 2) under some vertex bijection?

    Works by the complement: needed are two nonadjacent vertices whose
    union of neighbourhoods leaves at least n - 4 vertices untouched.
    """
    if g.n < 5:
        return False
    for x1 in range(g.n):
        row1 = g.rows[x1]
        for x2 in range(x1 + 1, g.n):
            if row1 >> x2 & 1:
                continue
            touched = (row1 | g.rows[x2] | (1 << x1) | (1 << x2)).bit_count()
            if touched <= 4:
                return True
    return False


@dataclass(frozen=True)
class StabilityClassification:
    """All matching structure cases for a dense graph missing a long cycle.

    a: spanning subgraph of a member of the (n, k+1) clique-anchor family.
    b: equal (up to isomorphism) to L(n, k+2).
    c: k = 0 and spanning subgraph of gamma_t(n, 2) up to relabeling.
    d: k = 1 and equal (up to isomorphism) to gamma_t(n, 3).
    """

    matches: tuple

    @property
    def primary(self) -> str:
        return self.matches[0] if self.matches else "none"


def classify_stability(g: Graph, k: int) -> StabilityClassification:
    """Match G against the four structure cases at parameter k."""
    n = g.n
    matches = []
    if is_subgraph_of_F(g, k + 1).is_member:
        matches.append("a")
    if n >= k + 4 and isomorphic(g, L(n, k + 2)):
        matches.append("b")
    if k == 0 and n >= 5 and fits_inside_gamma2(g):
        matches.append("c")
    if k == 1 and n >= 6 and isomorphic(g, gamma_t(n, 3)):
        matches.append("d")
    return StabilityClassification(matches=tuple(matches))


# -- family spec strings (CLI surface) --------------------------------------

_FAMILY_BUILDERS = {
    "L": (L, 2),
    "GAMMAT": (gamma_t, 2),
    "WG": (woodall_gamma, 2),
    "S": (s_nk, 2),
    "S+": (s_nk_plus, 2),
    "T2": (turan2, 1),
}


def from_spec(text: str) -> Graph:
    """Build a family graph from a spec string like "L:10,2" or "T2:8"."""
    name, sep, params = text.partition(":")
    if not sep:
        raise GraphError(f"family spec {text!r} needs the form NAME:params")
    key = name.strip().upper()
    if key not in _FAMILY_BUILDERS:
        known = ", ".join(sorted(_FAMILY_BUILDERS))
        raise GraphError(f"unknown family {name!r} (known: {known})")
    builder, arity = _FAMILY_BUILDERS[key]
    try:
        values = [int(p) for p in params.split(",")]
    except ValueError as exc:
        raise GraphError(f"bad parameters in family spec {text!r}") from exc
    if len(values) != arity:
        raise GraphError(f"family {name} takes {arity} parameter(s), got {len(values)}")
    return builder(*values)
