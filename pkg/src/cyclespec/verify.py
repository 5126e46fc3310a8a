"""Theorem-checking engine: exhaustive sweeps, sampled sweeps, extremal search.

Every check returns a ``Verdict``.  Exhaustive sweeps enumerate the
complement side of dense edge thresholds (few non-edges), sampled sweeps
draw seeded random graphs conditioned on the hypothesis and always inject
the known extremal constructions plus their one-edge perturbations, since
that is where the action is.  A check never reports "verified" when any
swept instance violated its assertion; violations are captured losslessly
as graph6 plus the violated condition.  When a claim's stated order bound
is unmet the verdict is "inconclusive" with a hypothesis-gate note rather
than a test of a claim nobody made.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from random import Random

from . import families
from .canon import canonical_form, isomorphic
from .cycles import (
    EXHAUSTED,
    NO,
    YES,
    BudgetExhausted,
    circumference,
    cycle_spectrum,
    has_cycle_of_length,
    is_hamiltonian,
)
from .graph import (
    Graph,
    GraphError,
    _bits,
    all_labeled_graphs,
    complete_graph,
    empty_graph,
    graph6_encode,
)
from .spectral import q_radius, spectral_radius
from .transforms import closure, kelmans

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
INCONCLUSIVE = "inconclusive"

SPECTRAL_MARGIN = 1e-9
FAMILY_MARGIN = 1e-8


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    violation: str


@dataclass(frozen=True)
class VerdictStats:
    checked: int
    seconds: float
    seed: int | None


@dataclass(frozen=True)
class Verdict:
    claim: str
    domain: str
    status: str
    counterexamples: tuple
    notes: tuple
    stats: VerdictStats

    def as_json(self, include_timing: bool = False) -> dict:
        """JSON document with stable field names; timing zeroed by default
        so that repeated seeded runs are byte-identical."""
        return {
            "claim": self.claim,
            "domain": self.domain,
            "status": self.status,
            "counterexamples": [
                {"graph6": c.graph6, "violation": c.violation}
                for c in self.counterexamples
            ],
            "notes": list(self.notes),
            "stats": {
                "checked": self.stats.checked,
                "seconds": self.stats.seconds if include_timing else 0.0,
                "seed": self.stats.seed,
            },
        }


class _Run:
    """Accumulator shared by all checks."""

    def __init__(self, claim: str, domain: str, seed=None):
        self.claim = claim
        self.domain = domain
        self.seed = seed
        self.counterexamples = []
        self.notes = []
        self.checked = 0
        self.inconclusive = False
        self.start = time.perf_counter()

    def fail(self, g: Graph, violation: str) -> None:
        self.counterexamples.append(
            Counterexample(graph6=graph6_encode(g), violation=violation)
        )

    def verdict(self) -> Verdict:
        if self.counterexamples:
            status = COUNTEREXAMPLE
        elif self.inconclusive:
            status = INCONCLUSIVE
        else:
            status = VERIFIED
        return Verdict(
            claim=self.claim,
            domain=self.domain,
            status=status,
            counterexamples=tuple(self.counterexamples),
            notes=tuple(self.notes),
            stats=VerdictStats(
                checked=self.checked,
                seconds=time.perf_counter() - self.start,
                seed=self.seed,
            ),
        )


def _gated(claim: str, domain: str, requirement: str, seed=None) -> Verdict:
    run = _Run(claim, domain, seed)
    run.inconclusive = True
    run.notes.append(f"hypothesis gate unmet: needs {requirement}")
    return run.verdict()


# -- instance generation -----------------------------------------------------


def _random_graph(rng: Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph._unsafe(n, tuple(rows))


def _dense_sample(rng: Random, n: int, min_edges: int) -> Graph:
    """Random graph conditioned on e >= min_edges, by rejection."""
    total = n * (n - 1) // 2
    if min_edges > total:
        raise GraphError(f"cannot place {min_edges} edges on {n} vertices")
    p = min(0.99, (min_edges + max(1.0, 0.04 * total)) / total)
    while True:
        g = _random_graph(rng, n, p)
        if g.edge_count() >= min_edges:
            return g


def _family_constructions(n: int, k: int):
    """Deterministic list of (label, graph) for every family buildable at n."""
    out = []
    seen = set()

    def add(label, g):
        if g.rows not in seen:
            seen.add(g.rows)
            out.append((label, g))

    for j in range(0, min(k + 3, n - 2) + 1):
        add(f"L({n},{j})", families.L(n, j))
    for t in (2, 3):
        if n >= t + 3:
            add(f"gamma_t({n},{t})", families.gamma_t(n, t))
    for j in range(0, min(k + 2, (n - 3) // 2) + 1):
        add(f"woodall_gamma({n},{j})", families.woodall_gamma(n, j))
    for j in (1, 2, 3):
        if n > j:
            add(f"s_nk({n},{j})", families.s_nk(n, j))
            if n - j >= 2:
                add(f"s_nk_plus({n},{j})", families.s_nk_plus(n, j))
    if n >= 2:
        add(f"turan2({n})", families.turan2(n))
    add(f"K_{n}", complete_graph(n))
    return out


def _injected_instances(n: int, k: int, min_edges: int):
    """Family constructions and their one-edge perturbations, filtered by
    the edge condition."""
    for label, g in _family_constructions(n, k):
        if g.edge_count() >= min_edges:
            yield label, g
        for u in range(n):
            for v in range(u + 1, n):
                h = g.toggle_edge(u, v)
                if h.edge_count() >= min_edges:
                    yield f"{label}~({u},{v})", h


def _dense_labeled_graphs(n: int, min_edges: int):
    """All labeled graphs with at least min_edges edges, by enumerating the
    missing-edge sets of the complement."""
    pairs = list(combinations(range(n), 2))
    total = len(pairs)
    full_rows = complete_graph(n).rows
    for r in range(total - min_edges + 1):
        for missing in combinations(range(total), r):
            rows = list(full_rows)
            for idx in missing:
                u, v = pairs[idx]
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            yield Graph._unsafe(n, tuple(rows))


def enumerate_nonisomorphic(n: int):
    """All graphs on n vertices up to isomorphism (canonical-form dedup)."""
    if not 1 <= n <= 9:
        raise GraphError("isomorphism-free enumeration is limited to n <= 9")
    level = {canonical_form(empty_graph(1)): empty_graph(1)}
    for size in range(2, n + 1):
        grown = {}
        for g in level.values():
            for mask in range(1 << (size - 1)):
                rows = list(g.rows)
                for i in _bits(mask):
                    rows[i] |= 1 << (size - 1)
                rows.append(mask)
                h = Graph._unsafe(size, tuple(rows))
                form = canonical_form(h)
                if form not in grown:
                    grown[form] = h
        level = grown
    return [level[form] for form in sorted(level)]


# -- cycle-range helpers -----------------------------------------------------


def _missing_length(g: Graph, lengths) -> int | None:
    """First length in ``lengths`` with no cycle of that length, else None."""
    for length in lengths:
        outcome = has_cycle_of_length(g, length)
        if outcome == EXHAUSTED:
            raise BudgetExhausted(f"search for C_{length} hit the budget")
        if outcome == NO:
            return length
    return None


def _weakly_pancyclic_girth3(g: Graph):
    """(ok, detail) for the 'weakly pancyclic with girth 3' assertion."""
    spectrum = cycle_spectrum(g)
    if spectrum.girth != 3:
        return False, f"girth is {spectrum.girth}, not 3", spectrum
    expected = set(range(3, spectrum.circumference + 1))
    gaps = sorted(expected - set(spectrum.lengths))
    if gaps:
        return False, f"cycle lengths missing below circumference: {gaps}", spectrum
    return True, "", spectrum


# -- the theorem checks ------------------------------------------------------


def check_woodall(
    n: int, k: int, exhaustive: bool = False, trials: int = 10000, seed: int = 0
) -> Verdict:
    """Dense graphs above the large-cycle threshold contain every cycle
    length in [3, n-k]."""
    th = families.thresholds(n, k).woodall
    domain = (
        f"exhaustive labeled n={n} k={k} e>={th}"
        if exhaustive
        else f"sampled n={n} k={k} e>={th} trials={trials} seed={seed} + injected"
    )
    if n < 2 * k + 3:
        return _gated("woodall", domain, f"n >= 2k+3 = {2 * k + 3}", seed)
    run = _Run("woodall", domain, None if exhaustive else seed)
    lengths = range(3, n - k + 1)

    def check(g: Graph, label: str) -> None:
        run.checked += 1
        missing = _missing_length(g, lengths)
        if missing is not None:
            run.fail(g, f"e >= {th} but no C_{missing} ({label})")

    if exhaustive:
        if n > 8:
            raise GraphError("exhaustive sweeps are limited to n <= 8")
        for g in _dense_labeled_graphs(n, th):
            check(g, "exhaustive")
    else:
        for label, g in _injected_instances(n, k, th):
            check(g, label)
        rng = Random(seed)
        for _ in range(trials):
            check(_dense_sample(rng, n, th), "sampled")
    return run.verdict()


def check_refined_woodall(
    n: int, k: int, exhaustive: bool = False, trials: int = 10000, seed: int = 0
) -> Verdict:
    """One edge below the threshold: weakly pancyclic with girth 3, and the
    full range [3, n-k] holds unless the graph is L(n, k+1)."""
    th = families.thresholds(n, k).refined
    domain = (
        f"exhaustive labeled n={n} k={k} e>={th}"
        if exhaustive
        else f"sampled n={n} k={k} e>={th} trials={trials} seed={seed} + injected"
    )
    need = max(6 * k + 11, (k + 3) * (k + 4) // 2)
    if n < need:
        return _gated("refined", domain, f"n >= max(6k+11, (k+3)(k+4)/2) = {need}", seed)
    run = _Run("refined", domain, None if exhaustive else seed)
    exception = families.L(n, k + 1)
    exceptions_seen = 0

    def check(g: Graph, label: str) -> None:
        nonlocal exceptions_seen
        run.checked += 1
        ok, detail, spectrum = _weakly_pancyclic_girth3(g)
        if not ok:
            run.fail(g, f"not weakly pancyclic with girth 3: {detail} ({label})")
            return
        missing = [x for x in range(3, n - k + 1) if x not in spectrum.lengths]
        if missing:
            if isomorphic(g, exception):
                exceptions_seen += 1
            else:
                run.fail(g, f"no C_{missing[0]} and not the exception graph ({label})")

    if exhaustive:
        if n > 8:
            raise GraphError("exhaustive sweeps are limited to n <= 8")
        for g in _dense_labeled_graphs(n, th):
            check(g, "exhaustive")
    else:
        for label, g in _injected_instances(n, k, th):
            check(g, label)
        rng = Random(seed)
        for _ in range(trials):
            check(_dense_sample(rng, n, th), "sampled")
    run.notes.append(f"exception graph hit {exceptions_seen} time(s)")
    return run.verdict()


def check_stability(
    n: int,
    k: int,
    trials: int = 10000,
    seed: int = 0,
    exhaustive: bool = False,
    enforce_hypothesis: bool = True,
) -> Verdict:
    """Above the stability threshold: weakly pancyclic with girth 3, and a
    graph missing C_{n-k} falls into one of the four structure cases."""
    th = families.thresholds(n, k).stability
    domain = (
        f"exhaustive labeled n={n} k={k} e>={th}"
        if exhaustive
        else f"sampled n={n} k={k} e>={th} trials={trials} seed={seed} + injected"
    )
    need = max(6 * k + 17, (k + 4) * (k + 5) // 2)
    if n < need:
        if enforce_hypothesis:
            return _gated(
                "stability", domain, f"n >= max(6k+17, (k+4)(k+5)/2) = {need}", seed
            )
        domain += f" [order bound n >= {need} unmet, sweep forced]"
    run = _Run("stability", domain, None if exhaustive else seed)
    classified = {"a": 0, "b": 0, "c": 0, "d": 0}

    def check(g: Graph, label: str) -> None:
        run.checked += 1
        ok, detail, spectrum = _weakly_pancyclic_girth3(g)
        if not ok:
            run.fail(g, f"not weakly pancyclic with girth 3: {detail} ({label})")
            return
        if (n - k) not in spectrum.lengths:
            cls = families.classify_stability(g, k)
            if cls.primary == "none":
                run.fail(g, f"missing C_{n - k} but matches no structure case ({label})")
            else:
                for case in cls.matches:
                    classified[case] += 1

    if exhaustive:
        if n > 8:
            raise GraphError("exhaustive sweeps are limited to n <= 8")
        for g in _dense_labeled_graphs(n, th):
            check(g, "exhaustive")
    else:
        for label, g in _injected_instances(n, k, th):
            check(g, label)
        rng = Random(seed)
        for _ in range(trials):
            check(_dense_sample(rng, n, th), "sampled")
    run.notes.append(
        "case matches among C_{%d}-free graphs: %s"
        % (n - k, " ".join(f"{c}={classified[c]}" for c in "abcd"))
    )
    return run.verdict()


def check_spectral_theorem(n: int, k: int, trials: int = 10000, seed: int = 0) -> Verdict:
    """A spectral radius (or signless Laplacian radius) at least that of
    L(n, k) forces every cycle length in [3, n-k+1], except L(n, k) itself."""
    domain = f"sampled n={n} k={k} trials={trials} seed={seed} + injected"
    if k < 1:
        return _gated("spectral", domain, "k >= 1", seed)
    need_a = max(6 * k + 11, (k + 3) * (k + 4) // 2)
    need_b = max(6 * k + 11, k * k + 2 * k + 3)
    part_a = n >= need_a
    part_b = n >= need_b
    if not part_a and not part_b:
        return _gated(
            "spectral", domain, f"n >= {min(need_a, need_b)} for at least one part", seed
        )
    run = _Run("spectral", domain, seed)
    if not part_a:
        run.notes.append(f"rho part gated (needs n >= {need_a})")
    if not part_b:
        run.notes.append(f"q part gated (needs n >= {need_b})")
    extremal = families.L(n, k)
    ref = {"rho": spectral_radius(extremal), "q": q_radius(extremal)}
    parts = [("rho", spectral_radius)] if part_a else []
    if part_b:
        parts.append(("q", q_radius))
    lengths = range(3, n - k + 2)

    def check(g: Graph, label: str) -> None:
        run.checked += 1
        for name, radius in parts:
            value = radius(g)
            target = ref[name]
            if value < target - SPECTRAL_MARGIN:
                continue
            missing = _missing_length(g, lengths)
            if missing is None:
                continue
            if isomorphic(g, extremal):
                continue
            if abs(value - target) < SPECTRAL_MARGIN:
                run.inconclusive = True
                run.notes.append(
                    f"ambiguous margin: {name}={value!r} vs {target!r} for "
                    f"{graph6_encode(g)} ({label})"
                )
            else:
                run.fail(
                    g, f"{name} >= {name}(L({n},{k})) but no C_{missing} ({label})"
                )

    min_edges = families.thresholds(n, k).refined - 2 * n
    for label, g in _injected_instances(n, k, max(0, min_edges)):
        check(g, label)
    rng = Random(seed)
    for _ in range(trials):
        check(_dense_sample(rng, n, max(1, min_edges)), "sampled")
    return run.verdict()


def check_even_cycle_bound(
    n: int,
    k: int,
    exhaustive: bool = True,
    dedup: bool = False,
    trials: int = 10000,
    seed: int = 0,
    find_attainers: bool = True,
) -> Verdict:
    """No even cycle longer than 2k forces e(G) <= (2k+1)(n-1)/2."""
    if k < 1:
        raise GraphError("the even-cycle bound needs k >= 1")
    bound = Fraction((2 * k + 1) * (n - 1), 2)
    long_even = [x for x in range(2 * k + 2, n + 1) if x % 2 == 0]
    mode = "dedup" if dedup else ("exhaustive" if exhaustive else "sampled")
    domain = f"{mode} n={n} k={k} bound={bound}"
    if not exhaustive and not dedup:
        domain += f" trials={trials} seed={seed}"
    run = _Run("even-cycle", domain, None if (exhaustive or dedup) else seed)

    def has_long_even(g: Graph) -> bool:
        for length in long_even:
            outcome = has_cycle_of_length(g, length)
            if outcome == EXHAUSTED:
                raise BudgetExhausted(f"search for C_{length} hit the budget")
            if outcome == YES:
                return True
        return False

    def check(g: Graph, label: str) -> None:
        run.checked += 1
        if 2 * g.edge_count() > (2 * k + 1) * (n - 1) and not has_long_even(g):
            run.fail(g, f"e={g.edge_count()} > {bound} without a long even cycle ({label})")

    e_min = (2 * k + 1) * (n - 1) // 2 + 1
    if dedup:
        if n > 9:
            raise GraphError("dedup sweeps are limited to n <= 9")
        classes = enumerate_nonisomorphic(n)
        for g in classes:
            if g.n == n:
                check(g, "dedup")
        if find_attainers:
            best_edges = -1
            attainers = []
            for g in classes:
                if g.n != n or has_long_even(g):
                    continue
                e = g.edge_count()
                if e > best_edges:
                    best_edges, attainers = e, [g]
                elif e == best_edges:
                    attainers.append(g)
            _note_attainers(run, best_edges, attainers)
    elif exhaustive:
        if n > 7:
            raise GraphError("labeled even-cycle sweeps are limited to n <= 7")
        for g in _dense_labeled_graphs(n, e_min):
            check(g, "exhaustive")
        if find_attainers:
            pairs = list(combinations(range(n), 2))
            best_edges, attainers = -1, []
            for e in range(e_min - 1, -1, -1):
                for chosen in combinations(pairs, e):
                    g = Graph._unsafe(n, _rows_from_pairs(n, chosen))
                    if not has_long_even(g):
                        if best_edges < 0:
                            best_edges = e
                        attainers.append(g)
                if best_edges >= 0:
                    break
            deduped = {}
            for g in attainers:
                deduped.setdefault(canonical_form(g), g)
            _note_attainers(run, best_edges, [deduped[f] for f in sorted(deduped)])
    else:
        rng = Random(seed)
        for _ in range(trials):
            p = rng.uniform(0.05, 0.95)
            check(_random_graph(rng, n, p), "sampled")
    return run.verdict()


def _rows_from_pairs(n, pairs):
    rows = [0] * n
    for u, v in pairs:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


def _note_attainers(run: _Run, best_edges: int, attainers) -> None:
    if best_edges < 0:
        run.notes.append("no graph without a long even cycle exists at this order")
        return
    shown = [graph6_encode(g) for g in attainers[:10]]
    run.notes.append(
        f"max edges without a long even cycle: {best_edges}; "
        f"attainers (up to iso, first {len(shown)}): {' '.join(sorted(shown))}"
    )


def check_kelmans_monotone(trials: int = 10000, seed: int = 0) -> Verdict:
    """The rewiring operation never decreases rho or q."""
    run = _Run("kelmans", f"sampled trials={trials} seed={seed} n<=24", seed)
    rng = Random(seed)
    for _ in range(trials):
        n = rng.randint(2, 24)
        g = _random_graph(rng, n, rng.uniform(0.1, 0.9))
        u, v = rng.sample(range(n), 2)
        h = kelmans(g, u, v)
        run.checked += 1
        if spectral_radius(h) < spectral_radius(g) - SPECTRAL_MARGIN:
            run.fail(g, f"rho decreased under rewiring {u}->{v}")
        if q_radius(h) < q_radius(g) - SPECTRAL_MARGIN:
            run.fail(g, f"q decreased under rewiring {u}->{v}")
    return run.verdict()


def check_spectral_bounds(trials: int = 10000, seed: int = 0, bound: str = "both") -> Verdict:
    """rho <= sqrt(2m-n+1) when delta >= 1, and q <= 2m/(n-1) + n - 2."""
    if bound not in ("both", "hong", "das"):
        raise GraphError(f"unknown bound selector {bound!r}")
    claim = {"both": "spectral-bounds", "hong": "hong", "das": "das"}[bound]
    run = _Run(claim, f"sampled trials={trials} seed={seed} n<=24", seed)
    rng = Random(seed)
    hong_checked = das_checked = 0
    for _ in range(trials):
        n = rng.randint(2, 24)
        g = _random_graph(rng, n, rng.uniform(0.05, 0.95))
        run.checked += 1
        if bound in ("both", "hong") and g.min_degree() >= 1:
            hong_checked += 1
            limit = math.sqrt(2 * g.edge_count() - g.n + 1)
            if spectral_radius(g) > limit + SPECTRAL_MARGIN:
                run.fail(g, f"rho exceeds sqrt(2m-n+1)={limit!r}")
        if bound in ("both", "das"):
            das_checked += 1
            limit = 2 * g.edge_count() / (g.n - 1) + g.n - 2
            if q_radius(g) > limit + SPECTRAL_MARGIN:
                run.fail(g, f"q exceeds 2m/(n-1)+n-2={limit!r}")
    run.notes.append(f"hong instances: {hong_checked}, das instances: {das_checked}")
    return run.verdict()


def check_sun_das(trials: int = 10000, seed: int = 0) -> Verdict:
    """Vertex deletion inequalities for rho^2, swept over every vertex."""
    run = _Run("sun-das", f"sampled trials={trials} seed={seed} n<=24 all vertices", seed)
    rng = Random(seed)
    for _ in range(trials):
        n = rng.randint(2, 24)
        g = _random_graph(rng, n, rng.uniform(0.05, 0.95))
        run.checked += 1
        rho_sq = spectral_radius(g) ** 2
        delta_ok = g.min_degree() >= 1
        for v in range(n):
            deleted, _ = g.delete_vertex(v)
            rho_del_sq = spectral_radius(deleted) ** 2 if deleted.n else 0.0
            d = g.degree(v)
            if delta_ok and rho_del_sq < rho_sq - 2 * d + 1 - SPECTRAL_MARGIN:
                run.fail(g, f"deletion bound fails at v={v}")
            if rho_sq > rho_del_sq + 2 * d + SPECTRAL_MARGIN:
                run.fail(g, f"addition bound fails at v={v}")
    return run.verdict()


def check_closure_circumference(n_max: int = 7) -> Verdict:
    """The degree-sum closure at threshold n preserves the circumference,
    over every labeled graph up to n_max vertices."""
    if n_max > 8:
        raise GraphError("exhaustive closure sweeps are limited to n <= 8")
    run = _Run("closure", f"exhaustive labeled n<={n_max}", None)
    for n in range(1, n_max + 1):
        for g in all_labeled_graphs(n):
            run.checked += 1
            result = closure(g, n)
            if not result.added:
                continue
            c_closed = circumference(result.graph)
            if c_closed == 0:
                continue  # closure acyclic, so the subgraph is too
            if has_cycle_of_length(g, c_closed) != YES:
                run.fail(
                    g,
                    f"circumference changed: closure has C_{c_closed}, original "
                    f"only {circumference(g)}",
                )
    return run.verdict()


def check_bondy_pancyclic(trials: int = 10000, seed: int = 0) -> Verdict:
    """e(G) > c(2n-c)/4 with c the circumference forces weak pancyclicity
    with girth 3."""
    run = _Run("bondy", f"sampled trials={trials} seed={seed} n<=16", seed)
    rng = Random(seed)
    hits = 0
    for _ in range(trials):
        n = rng.randint(4, 16)
        g = _random_graph(rng, n, rng.uniform(0.15, 0.95))
        run.checked += 1
        c = circumference(g)
        if c < 3:
            continue
        if 4 * g.edge_count() <= c * (2 * n - c):
            continue
        hits += 1
        ok, detail, _ = _weakly_pancyclic_girth3(g)
        if not ok:
            run.fail(g, f"edge bound met but {detail}")
    run.notes.append(f"hypothesis met by {hits} instance(s)")
    return run.verdict()


def check_ore(n_max: int = 7) -> Verdict:
    """Non-hamiltonian graphs have at most C(n-1, 2) + 1 edges; checked by
    sweeping every labeled graph above the bound for hamiltonicity."""
    if n_max > 8:
        raise GraphError("exhaustive sweeps are limited to n <= 8")
    run = _Run("ore", f"exhaustive labeled 3<=n<={n_max}", None)
    for n in range(3, n_max + 1):
        floor_edges = comb(n - 1, 2) + 2
        for g in _dense_labeled_graphs(n, floor_edges):
            run.checked += 1
            if not is_hamiltonian(g):
                run.fail(g, f"e={g.edge_count()} > C(n-1,2)+1 but not hamiltonian")
    return run.verdict()


def check_family_comparisons(k_max: int = 10, n_max: int = 60) -> Verdict:
    """Strict radius orderings along the L chain and against the gamma
    graphs, with margin 1e-8."""
    run = _Run("family-cmp", f"numeric sweep k<={k_max} n<={n_max} margin={FAMILY_MARGIN}", None)
    cache_rho: dict = {}
    cache_q: dict = {}

    def rho_L(n, k):
        if (n, k) not in cache_rho:
            cache_rho[(n, k)] = spectral_radius(families.L(n, k))
        return cache_rho[(n, k)]

    def q_L(n, k):
        if (n, k) not in cache_q:
            cache_q[(n, k)] = q_radius(families.L(n, k))
        return cache_q[(n, k)]

    for k in range(1, k_max + 1):
        for n in range(2 * k + 4, n_max + 1):
            run.checked += 1
            if rho_L(n, k) - rho_L(n, k + 1) <= FAMILY_MARGIN:
                run.fail(families.L(n, k), f"rho(L({n},{k})) not above rho(L({n},{k + 1}))")
            if q_L(n, k) - q_L(n, k + 1) <= FAMILY_MARGIN:
                run.fail(families.L(n, k), f"q(L({n},{k})) not above q(L({n},{k + 1}))")
    for n in range(6, n_max + 1):
        run.checked += 1
        g2 = families.gamma_t(n, 2)
        if rho_L(n, 1) - spectral_radius(g2) <= FAMILY_MARGIN:
            run.fail(g2, f"rho(L({n},1)) not above rho(gamma_t({n},2))")
        if q_L(n, 1) - q_radius(g2) <= FAMILY_MARGIN:
            run.fail(g2, f"q(L({n},1)) not above q(gamma_t({n},2))")
    # The gamma_t(n, 3) orderings genuinely reverse at n = 6 (rho and q) and
    # n = 7 (q); the Hong/Das bounding chain that proves them needs n >= 9,
    # so the sweep starts at 8 where both hold with margin.
    for n in range(8, n_max + 1):
        run.checked += 1
        g3 = families.gamma_t(n, 3)
        if rho_L(n, 2) - spectral_radius(g3) <= FAMILY_MARGIN:
            run.fail(g3, f"rho(L({n},2)) not above rho(gamma_t({n},3))")
        if q_L(n, 2) - q_radius(g3) <= FAMILY_MARGIN:
            run.fail(g3, f"q(L({n},2)) not above q(gamma_t({n},3))")
    run.notes.append(
        "gamma_t(n,2) comparisons swept from n=6; gamma_t(n,3) comparisons "
        "swept from n=8 (they are false at n=6 and, for q, at n=7)"
    )
    return run.verdict()


def check_quarter_n_property(
    n_values=(16, 20, 24), trials: int = 1000, seed: int = 0
) -> Verdict:
    """Graphs with rho above the balanced-bipartite value contain every
    cycle length up to ceil(n/4); a desk-scale property sweep standing in
    for the asymptotic quarter-n statement, not a proof-scale reproduction."""
    n_values = tuple(n_values)
    if any(n > 24 for n in n_values):
        raise GraphError("quarter-n sweeps are limited to n <= 24")
    run = _Run(
        "quarter-n",
        f"sampled n in {list(n_values)} trials={trials} seed={seed} + injected",
        seed,
    )
    for n in n_values:
        target = math.sqrt(n * n // 4)
        lengths = range(3, (n + 3) // 4 + 1)

        def check(g: Graph, label: str) -> None:
            if spectral_radius(g) <= target:
                return
            run.checked += 1
            missing = _missing_length(g, lengths)
            if missing is not None:
                run.fail(g, f"rho above sqrt(n^2/4) but no C_{missing} ({label})")

        check(families.turan2(n).add_edge(0, 1), "turan2+edge")
        check(complete_graph(n), "complete")
        check(families.L(n, 1), "L(n,1)")
        rng = Random(seed + n)
        accepted = 0
        draws = 0
        while accepted < trials and draws < 200 * trials:
            draws += 1
            g = _random_graph(rng, n, rng.uniform(0.55, 0.95))
            if spectral_radius(g) > target:
                accepted += 1
                run.checked += 1
                missing = _missing_length(g, lengths)
                if missing is not None:
                    run.fail(g, f"rho above sqrt(n^2/4) but no C_{missing} (sampled)")
        if accepted < trials:
            run.inconclusive = True
            run.notes.append(f"only {accepted}/{trials} accepted samples at n={n}")
    return run.verdict()


# -- extremal search ---------------------------------------------------------


@dataclass(frozen=True)
class AnnealSchedule:
    steps: int = 4000
    t_start: float = 1.5
    t_end: float = 0.002
    restarts: int = 3


@dataclass(frozen=True)
class LedgerEntry:
    step: int
    value: float
    graph6: str


@dataclass(frozen=True)
class SearchState:
    """Final state of a constrained annealing run (best is the ledger max)."""

    n: int
    k: int | None
    objective: str
    forbidden: frozenset
    schedule: AnnealSchedule
    seed: int
    current: Graph
    current_value: float
    best: Graph
    best_value: float
    ledger: tuple


def _path_of_length(rows, u: int, v: int, edges_needed: int, budget: list) -> bool:
    """Exact search for a simple u-v path with the given number of edges."""
    target_bit = 1 << v

    def dfs(head: int, visited: int, remaining: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExhausted("path search hit the budget")
        if remaining == 1:
            return bool(rows[head] & target_bit)
        cand = rows[head] & ~visited & ~target_bit
        if not cand:
            return False
        avail = (cand | target_bit) & ~visited
        reach = 1 << head
        frontier = reach
        steps = 0
        while frontier and not reach & target_bit and steps < remaining:
            grow = 0
            for x in _bits(frontier):
                grow |= rows[x]
            frontier = grow & avail & ~reach
            reach |= frontier
            steps += 1
        if not reach & target_bit:
            return False
        for w in _bits(cand):
            if dfs(w, visited | (1 << w), remaining - 1):
                return True
        return False

    if edges_needed < 1:
        return False
    if edges_needed == 1:
        return bool(rows[u] & target_bit)
    return dfs(u, 1 << u, edges_needed)


def _addition_makes_forbidden(g: Graph, u: int, v: int, forbidden) -> bool:
    """Would adding edge uv create a cycle of a forbidden length?

    Only cycles through the new edge can appear, so it suffices to look for
    a u-v path of length L-1 avoiding the edge itself.
    """
    for length in forbidden:
        if length > g.n:
            continue
        if _path_of_length(g.rows, u, v, length - 1, [10**7]):
            return True
    return False


def search_extremal(
    n: int,
    k: int | None = None,
    forbidden=(),
    objective: str = "rho",
    schedule: AnnealSchedule | None = None,
    seed: int = 0,
) -> SearchState:
    """Simulated annealing over edge flips, maximizing rho or q subject to
    a forbidden set of cycle lengths.

    Proposals that would create a forbidden cycle are rejected outright, so
    every visited state satisfies the constraint; ledger insertions re-check
    the constraint with the full exact cycle search.  Deterministic for a
    fixed seed.
    """
    if not 1 <= n <= 24:
        raise GraphError("extremal search is limited to n <= 24")
    forbidden = frozenset(int(x) for x in forbidden)
    for length in forbidden:
        if not 3 <= length <= n:
            raise GraphError(f"forbidden length {length} outside [3, {n}]")
    if objective not in ("rho", "q"):
        raise GraphError(f"objective must be rho or q, not {objective!r}")
    radius = spectral_radius if objective == "rho" else q_radius
    schedule = schedule or AnnealSchedule()
    rng = Random(seed)
    pairs = list(combinations(range(n), 2))

    best: Graph = empty_graph(n)
    best_value = radius(best)
    ledger = [LedgerEntry(step=0, value=best_value, graph6=graph6_encode(best))]
    current = best
    current_value = best_value
    global_step = 0
    cooling = (schedule.t_end / schedule.t_start) ** (1.0 / max(1, schedule.steps))

    for _ in range(schedule.restarts):
        g = empty_graph(n)
        value = radius(g)
        temperature = schedule.t_start
        for _ in range(schedule.steps):
            global_step += 1
            temperature *= cooling
            u, v = pairs[rng.randrange(len(pairs))]
            if g.has_edge(u, v):
                candidate = g.remove_edge(u, v)
            else:
                if _addition_makes_forbidden(g, u, v, forbidden):
                    continue
                candidate = g.add_edge(u, v)
            cand_value = radius(candidate)
            delta = cand_value - value
            if delta >= 0 or rng.random() < math.exp(delta / temperature):
                g, value = candidate, cand_value
                if value > best_value + 1e-12:
                    for length in sorted(forbidden):
                        if has_cycle_of_length(g, length) != NO:
                            raise RuntimeError(
                                "constraint violated at ledger insertion; "
                                "incremental check is unsound"
                            )
                    best, best_value = g, value
                    ledger.append(
                        LedgerEntry(step=global_step, value=value, graph6=graph6_encode(g))
                    )
        current, current_value = g, value
    return SearchState(
        n=n,
        k=k,
        objective=objective,
        forbidden=forbidden,
        schedule=schedule,
        seed=seed,
        current=current,
        current_value=current_value,
        best=best,
        best_value=best_value,
        ledger=tuple(ledger),
    )
