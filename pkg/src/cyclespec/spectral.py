"""Spectral radius and signless Laplacian radius via shifted power iteration.

Both radii are computed per connected component with power iteration on
M + I, where M is the component's adjacency matrix A (for rho) or the
signless Laplacian Q = A + D (for q).  The +I shift makes the iteration
matrix primitive even on bipartite components, so convergence follows from
Perron-Frobenius; the shift is removed implicitly because the Rayleigh
quotient is always evaluated against M itself.  Convergence requires both
a stagnating Rayleigh quotient and a small residual, since Rayleigh
stagnation alone can mislead near-degenerate spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, _bits

DEFAULT_TOL = 1e-10
MIN_TOL = 1e-13
ITERATION_CAP = 10**6


class ConvergenceError(RuntimeError):
    """Power iteration failed to converge within the iteration cap."""


@dataclass(frozen=True)
class SpectralSummary:
    rho: float
    q: float
    hong: float
    hong_valid: bool
    das: float | None
    tol: float
    iters: int


@dataclass(frozen=True)
class HongBound:
    """sqrt(2m - n + 1); an upper bound for rho only when delta(G) >= 1."""

    value: float
    valid: bool


@dataclass(frozen=True)
class SunDasCheck:
    """Both sides of the vertex-deletion inequalities for rho^2.

    Deletion form (needs min degree >= 1):  rho^2(G-v) >= rho^2(G) - 2d(v) + 1.
    Unconditional form:                     rho^2(G)  <= rho^2(G-v) + 2d(v).
    """

    rho_sq: float
    rho_sq_deleted: float
    degree: int
    min_degree_ok: bool

    @property
    def deletion_lhs(self) -> float:
        return self.rho_sq_deleted

    @property
    def deletion_rhs(self) -> float:
        return self.rho_sq - 2 * self.degree + 1

    @property
    def addition_lhs(self) -> float:
        return self.rho_sq

    @property
    def addition_rhs(self) -> float:
        return self.rho_sq_deleted + 2 * self.degree


def _check_tol(tol: float) -> None:
    if tol < MIN_TOL:
        raise GraphError(f"tolerance {tol} below the supported minimum {MIN_TOL}")


def _power_top(matrix: np.ndarray, tol: float):
    """Largest eigenvalue of a symmetric nonnegative matrix, with iterations."""
    n = matrix.shape[0]
    if n == 1:
        return float(matrix[0, 0]), 0
    x = np.full(n, 1.0 / math.sqrt(n))
    mx = matrix @ x
    lam = float(x @ mx)
    prev = math.inf
    for it in range(1, ITERATION_CAP + 1):
        residual = float(np.max(np.abs(mx - lam * x)))
        if abs(lam - prev) < tol / 4 and residual < tol * max(1.0, lam):
            return lam, it
        y = mx + x
        x = y / float(np.linalg.norm(y))
        prev = lam
        mx = matrix @ x
        lam = float(x @ mx)
    raise ConvergenceError(
        f"power iteration did not converge within {ITERATION_CAP} iterations"
    )


def _component_matrices(g: Graph, signless: bool):
    for comp in g._component_masks():
        vertices = list(_bits(comp))
        size = len(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        a = np.zeros((size, size), dtype=np.float64)
        for v in vertices:
            for u in _bits(g.rows[v] & comp):
                a[pos[v], pos[u]] = 1.0
        if signless:
            a += np.diag(a.sum(axis=1))
        yield a


def _radius(g: Graph, tol: float, signless: bool):
    _check_tol(tol)
    if g.n == 0:
        raise GraphError("spectral radius needs at least one vertex")
    best = 0.0
    total_iters = 0
    for matrix in _component_matrices(g, signless):
        lam, iters = _power_top(matrix, tol)
        total_iters += iters
        best = max(best, lam)
    return best, total_iters


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Largest adjacency eigenvalue rho(G); 0 for the one-vertex graph."""
    return _radius(g, tol, signless=False)[0]


def q_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Largest signless Laplacian eigenvalue q(G)."""
    return _radius(g, tol, signless=True)[0]


def hong_bound(g: Graph) -> HongBound:
    """sqrt(2m - n + 1) with a validity flag (requires min degree >= 1)."""
    if g.n == 0:
        raise GraphError("bound needs at least one vertex")
    value = 2 * g.edge_count() - g.n + 1
    return HongBound(
        value=math.sqrt(value) if value >= 0 else math.nan,
        valid=g.min_degree() >= 1,
    )


def das_bound(g: Graph) -> float:
    """2m/(n-1) + n - 2, an upper bound for q(G) for every n >= 2."""
    if g.n < 2:
        raise GraphError("bound needs at least two vertices")
    return 2 * g.edge_count() / (g.n - 1) + g.n - 2


def sun_das_check(g: Graph, v: int, tol: float = DEFAULT_TOL) -> SunDasCheck:
    """Evaluate both vertex-deletion inequalities for rho^2 at vertex v."""
    g._check_vertex(v)
    deleted, _ = g.delete_vertex(v)
    rho = spectral_radius(g, tol)
    rho_del = spectral_radius(deleted, tol) if deleted.n >= 1 else 0.0
    return SunDasCheck(
        rho_sq=rho * rho,
        rho_sq_deleted=rho_del * rho_del,
        degree=g.degree(v),
        min_degree_ok=g.min_degree() >= 1,
    )


def summary(g: Graph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    """All spectral quantities in one record."""
    rho, iters_a = _radius(g, tol, signless=False)
    q, iters_q = _radius(g, tol, signless=True)
    hong = hong_bound(g)
    das = das_bound(g) if g.n >= 2 else None
    return SpectralSummary(
        rho=rho,
        q=q,
        hong=hong.value,
        hong_valid=hong.valid,
        das=das,
        tol=tol,
        iters=iters_a + iters_q,
    )
