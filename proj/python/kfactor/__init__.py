"""Constructive k-factor certification for simple graphs.

Thin re-export of the compiled extension: graph construction and
combinators, the extremal families, spectral radius machinery, three
independent k-factor deciders, exact toughness/binding enumeration, the
theorem checkers and the random sweep.
"""

from kfactor._kfactor import (  # noqa: F401
    ComponentType,
    DeficiencyWitness,
    FactorCertificate,
    FactorVerdict,
    FamilyInstance,
    Graph,
    GuardError,
    HypothesisBreakdown,
    ParamError,
    ParamReport,
    ParseError,
    Rational,
    SamplerError,
    SpectralResult,
    SweepReport,
    TheoremTally,
    TheoremVerdict,
    ThresholdComparison,
    ToughnessCheck,
    TutteGadget,
    binding_number,
    binomial_shift_inequality,
    brute_force_factor,
    certificate_valid,
    check_binding_corollary,
    check_conjecture_theorem,
    check_edge_theorem,
    check_spectral_theorem,
    check_tough_theorem,
    compare_to_threshold,
    complete,
    components,
    conjecture_extremal,
    cycle,
    deficiency,
    disjoint_union,
    edge_shift,
    emit_dot,
    empty_graph,
    encode_graph6,
    family_edge_threshold,
    g1_family,
    g2_family,
    has_k_factor,
    hong_nikiforov_bound,
    is_connected,
    is_isomorphic,
    is_t_tough,
    join,
    max_matching_blossom,
    min_deficiency,
    parse_graph6,
    path,
    random_graph,
    random_permutation,
    relabel,
    spectral_radius,
    sweep,
    theorem_order_bound,
    toughness,
    tutte_gadget,
)

__version__ = "0.1.0"
