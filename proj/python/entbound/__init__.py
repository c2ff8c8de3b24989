"""Certified lower bounds on bipartite entanglement measures.

Thin python surface over the C++ core: given a witness state |phi> with
largest squared Schmidt coefficient s1 on an m (x) n system and a measured
overlap <phi|rho|phi>, `bound_report_from_fidelity` returns analytic lower
bounds on the entanglement of formation, geometric measure, concurrence,
convex-roof extended negativity and G-concurrence of rho.
"""

from ._core import (  # noqa: F401
    CURVES,
    MEASURES,
    BoundReport,
    DensityMatrix,
    DomainError,
    InvalidInput,
    LambdaValue,
    LOOTerm,
    NotEntangled,
    NumericalFailure,
    PureState,
    WitnessSpec,
    beta_curve,
    bound_report,
    bound_report_from_fidelity,
    boundary_schmidt_vector,
    co_k,
    co_p,
    co_r,
    compute_lambda,
    concurrence_pure,
    convex_roof_upper,
    cren_bound,
    cren_upper_from_gme,
    curve_table,
    density_matrix,
    dicke_4_2_state,
    eof_pure,
    fidelity_with_pure,
    gamma_minus,
    gamma_plus,
    gconcurrence_pure,
    gme_lower_from_cren,
    gme_pure,
    k_curve,
    lambda_from_fidelity,
    lambda_of_schmidt,
    loo_expansion,
    make_witness,
    max_entangled_state,
    negativity_mixed,
    negativity_pure,
    p_curve,
    psi_s_state,
    pure_state,
    pure_to_density,
    q_curve,
    r_curve,
    random_density_matrix,
    random_pure_state,
    random_schmidt_vector,
    scatter,
    schmidt_values,
    tradeoff_slack,
    witness_operator,
    wootters_concurrence,
    wootters_eof,
)

__version__ = "0.1.0"
