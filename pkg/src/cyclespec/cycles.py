"""Exact cycle-length detection.

The workhorse is a depth-first path search for cycles of one fixed length.
Each candidate cycle is anchored at its lowest-indexed vertex and extended
only through higher-indexed vertices, which kills the n-fold rotational
symmetry; the reversal symmetry is killed by requiring the closing vertex
to exceed the first step.  Branches are pruned with a breadth-limited
bitset relaxation: if the anchor is unreachable from the path head within
the remaining number of steps, the branch is dead.  Searches are exact;
a node-expansion budget guards against pathological inputs and budget
exhaustion is reported explicitly, never silently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .graph import Graph, GraphError, _bits

DEFAULT_BUDGET = 10**8

YES = "yes"
NO = "no"
EXHAUSTED = "exhausted"


class BudgetExhausted(RuntimeError):
    """The node-expansion budget ran out before the search finished."""


class _Exhausted(Exception):
    pass


def effective_budget(budget=None) -> int:
    """Resolve the search budget; CYCLESPEC_BUDGET overrides the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("CYCLESPEC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class CycleSpectrum:
    """Realized cycle lengths plus derived summaries (0 means absent)."""

    lengths: frozenset
    girth: int
    circumference: int
    ec: int
    oc: int


def _two_core(g: Graph):
    """Mask of vertices surviving iterated removal of degree < 2 vertices."""
    rows = g.rows
    alive = g.vertex_mask()
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (rows[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def _search_fixed_length(rows, alive: int, length: int, budget: list) -> bool:
    """True iff a cycle of exactly ``length`` lies inside ``alive``."""
    for a in _bits(alive):
        allowed = alive & ~((1 << (a + 1)) - 1)
        if allowed.bit_count() < length - 1:
            break
        adj_a = rows[a] & allowed
        if adj_a.bit_count() < 2:
            continue
        target = 1 << a

        def extend(head: int, visited: int, depth: int, first: int) -> bool:
            budget[0] -= 1
            if budget[0] < 0:
                raise _Exhausted
            cand = rows[head] & allowed & ~visited
            remaining = length - depth
            if remaining == 1:
                closers = cand & rows[a] & ~((1 << (first + 1)) - 1)
                return closers != 0
            if not cand:
                return False
            free = allowed & ~visited
            if free.bit_count() < remaining:
                return False
            # Breadth-limited relaxation: the anchor must be reachable from
            # the head within remaining + 1 steps through unused vertices.
            avail = free | target
            reach = 1 << head
            frontier = reach
            steps = 0
            while frontier and not reach & target and steps <= remaining:
                grow = 0
                for u in _bits(frontier):
                    grow |= rows[u]
                frontier = grow & avail & ~reach
                reach |= frontier
                steps += 1
            if not reach & target:
                return False
            for v in _bits(cand):
                if extend(v, visited | (1 << v), depth + 1, first):
                    return True
            return False

        for v1 in _bits(adj_a):
            if length == 3:
                if rows[v1] & adj_a & ~((1 << (v1 + 1)) - 1):
                    return True
                budget[0] -= 1
                if budget[0] < 0:
                    raise _Exhausted
                continue
            if extend(v1, target | (1 << v1), 2, v1):
                return True
    return False


def has_cycle_of_length(g: Graph, length: int, budget=None) -> str:
    """Exact tri-state answer: "yes", "no", or "exhausted" (budget hit)."""
    if not 3 <= length <= g.n:
        raise GraphError(f"cycle length {length} outside [3, {g.n}]")
    core = _two_core(g)
    if core.bit_count() < length:
        return NO
    budget_box = [effective_budget(budget)]
    try:
        found = _search_fixed_length(g.rows, core, length, budget_box)
    except _Exhausted:
        return EXHAUSTED
    return YES if found else NO


def cycle_spectrum(g: Graph, budget=None) -> CycleSpectrum:
    """All realized cycle lengths; raises BudgetExhausted if any search dies."""
    lengths = set()
    for length in range(3, g.n + 1):
        outcome = has_cycle_of_length(g, length, budget)
        if outcome == EXHAUSTED:
            raise BudgetExhausted(f"cycle search for length {length} hit the budget")
        if outcome == YES:
            lengths.add(length)
    evens = [x for x in lengths if x % 2 == 0]
    odds = [x for x in lengths if x % 2 == 1]
    return CycleSpectrum(
        lengths=frozenset(lengths),
        girth=min(lengths) if lengths else 0,
        circumference=max(lengths) if lengths else 0,
        ec=max(evens) if evens else 0,
        oc=max(odds) if odds else 0,
    )


def girth(g: Graph, budget=None) -> int:
    """Length of a shortest cycle, 0 if acyclic."""
    for length in range(3, g.n + 1):
        outcome = has_cycle_of_length(g, length, budget)
        if outcome == EXHAUSTED:
            raise BudgetExhausted(f"cycle search for length {length} hit the budget")
        if outcome == YES:
            return length
    return 0


def circumference(g: Graph, budget=None) -> int:
    """Length of a longest cycle, 0 if acyclic."""
    for length in range(g.n, 2, -1):
        outcome = has_cycle_of_length(g, length, budget)
        if outcome == EXHAUSTED:
            raise BudgetExhausted(f"cycle search for length {length} hit the budget")
        if outcome == YES:
            return length
    return 0


def is_weakly_pancyclic(g: Graph, budget=None) -> bool:
    """True iff every length between girth and circumference is realized."""
    spectrum = cycle_spectrum(g, budget)
    if not spectrum.lengths:
        raise GraphError("weak pancyclicity is undefined for acyclic graphs")
    expected = set(range(spectrum.girth, spectrum.circumference + 1))
    return set(spectrum.lengths) == expected


def is_hamiltonian(g: Graph, budget=None) -> bool:
    if g.n < 3:
        raise GraphError("hamiltonicity needs at least 3 vertices")
    outcome = has_cycle_of_length(g, g.n, budget)
    if outcome == EXHAUSTED:
        raise BudgetExhausted("hamiltonicity search hit the budget")
    return outcome == YES


def longest_even_cycle(g: Graph, budget=None) -> int:
    return cycle_spectrum(g, budget).ec


def longest_odd_cycle(g: Graph, budget=None) -> int:
    return cycle_spectrum(g, budget).oc


# -- theta subgraphs --------------------------------------------------------


@dataclass(frozen=True)
class ThetaComponent:
    vertices: tuple
    kind: str  # "vertex" | "edge" | "cycle" | "other"


@dataclass(frozen=True)
class ThetaStructure:
    """Theta detection result; components are classified only if theta-free."""

    has_theta: bool
    components: tuple
    note: str = ""


def _disjoint_paths_at_least(rows, comp: int, s: int, t: int, want: int) -> bool:
    """Menger check: at least ``want`` internally disjoint s-t paths.

    Unit-capacity max flow on the vertex-split network; the direct edge,
    if present, contributes one path.
    """
    # Node encoding: 2v = v_in, 2v + 1 = v_out.
    cap = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in _bits(comp):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else want)
        for u in _bits(rows[v] & comp):
            add(2 * v + 1, 2 * u, 1)
    out_arcs = {}
    for (a, b) in cap:
        out_arcs.setdefault(a, []).append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < want:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            node = queue.pop(0)
            for nxt in out_arcs.get(node, ()):
                if nxt not in parent and cap[(node, nxt)] > 0:
                    parent[nxt] = node
                    queue.append(nxt)
        if sink not in parent:
            return False
        node = sink
        while parent[node] is not None:
            prev = parent[node]
            cap[(prev, node)] -= 1
            cap[(node, prev)] += 1
            node = prev
        flow += 1
    return True


def theta_structure(g: Graph) -> ThetaStructure:
    """Detect a theta subgraph (two vertices joined by three internally
    disjoint paths); if none exists, classify every component.

    The detection is exact against the literal definition: a component can
    carry two independent cycles (more edges than vertices) and still be
    theta-free when the cycles meet in at most one vertex, so each
    candidate pair is settled by a Menger-style disjoint-path computation.
    """
    rows = g.rows
    masks = g._component_masks()
    for comp in masks:
        nc = comp.bit_count()
        mc = sum((rows[v] & comp).bit_count() for v in _bits(comp)) // 2
        if mc < nc + 1:
            continue  # cyclomatic number <= 1: at most one cycle, no theta
        candidates = [v for v in _bits(comp) if (rows[v] & comp).bit_count() >= 3]
        for i, u in enumerate(candidates):
            for v in candidates[i + 1 :]:
                if _disjoint_paths_at_least(rows, comp, u, v, 3):
                    return ThetaStructure(has_theta=True, components=())
    tagged = []
    others = []
    for comp in masks:
        vertices = tuple(_bits(comp))
        nc = len(vertices)
        degs = [(rows[v] & comp).bit_count() for v in vertices]
        mc = sum(degs) // 2
        if nc == 1:
            kind = "vertex"
        elif nc == 2 and mc == 1:
            kind = "edge"
        elif mc == nc and all(d == 2 for d in degs):
            kind = "cycle"
        else:
            kind = "other"
            others.append(vertices)
        tagged.append(ThetaComponent(vertices=vertices, kind=kind))
    note = ""
    if others:
        note = (
            f"{len(others)} component(s) are neither an edge nor a cycle "
            "(trees and one-cycle/two-cycle blobs land here)"
        )
    return ThetaStructure(has_theta=False, components=tuple(tagged), note=note)
