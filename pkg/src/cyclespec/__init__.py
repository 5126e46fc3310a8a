"""Verification toolkit for spectral-extremal cycle theorems.

Build the named extremal families, compute exact cycle spectra and
(signless Laplacian) spectral radii, apply the degree-sum closure and the
Kelmans rewiring, and machine-check the classical and recent claims about
cycles of consecutive lengths: exhaustively at small orders, by seeded
sampling plus injected extremal witnesses beyond.
"""

from .canon import canonical_form, canonical_labeling, isomorphic
from .cycles import (
    BudgetExhausted,
    CycleSpectrum,
    ThetaStructure,
    circumference,
    cycle_spectrum,
    girth,
    has_cycle_of_length,
    is_hamiltonian,
    is_weakly_pancyclic,
    longest_even_cycle,
    longest_odd_cycle,
    theta_structure,
)
from .families import (
    L,
    FMembership,
    StabilityClassification,
    Thresholds,
    classify_stability,
    from_spec,
    gamma_t,
    is_subgraph_of_F,
    s_nk,
    s_nk_plus,
    thresholds,
    turan2,
    woodall_gamma,
)
from .graph import (
    ComponentDecomposition,
    Graph,
    GraphError,
    build,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph6_decode,
    graph6_encode,
    join,
    path_graph,
)
from .spectral import (
    ConvergenceError,
    HongBound,
    SpectralSummary,
    SunDasCheck,
    das_bound,
    hong_bound,
    q_radius,
    spectral_radius,
    summary,
    sun_das_check,
)
from .transforms import ClosureResult, closure, kelmans
from .verify import (
    AnnealSchedule,
    SearchState,
    Verdict,
    check_bondy_pancyclic,
    check_closure_circumference,
    check_even_cycle_bound,
    check_family_comparisons,
    check_kelmans_monotone,
    check_ore,
    check_quarter_n_property,
    check_refined_woodall,
    check_spectral_bounds,
    check_spectral_theorem,
    check_stability,
    check_sun_das,
    check_woodall,
    enumerate_nonisomorphic,
    search_extremal,
)

__version__ = "0.1.0"
