"""isgw: a workbench for finite inverse semigroups, their congruences,
filter spaces and germ groupoids, with a theorem-verification harness."""

__version__ = "0.1.0"

from .congruences import (
    Congruence,
    QuotientSemigroup,
    all_congruences_rees,
    condition_L,
    congruence_closure,
    double_arrow,
    enumerate_congruences,
    is_congruence_free,
    quotient,
    rees_congruence,
    rees_quotient,
)
from .core import (
    InverseSemigroup,
    NaturalOrder,
    PartialBijection,
    build_semigroup,
    from_partial_bijections,
    from_tables,
    idempotents,
    natural_order,
    semigroup_from_json,
)
from .graphs import (
    DirectedGraph,
    GraphPath,
    TruncatedGraphSemigroup,
    graph_conditions,
    graph_semigroup,
    hereditary_sets,
    parse_graph,
    quotient_graph,
)
from .groupoid import (
    FiniteGroupoid,
    Germ,
    GroupoidMap,
    build_groupoids,
    condition_K,
    effectiveness,
    germ_of,
    reduction,
    verify_structure_theorems,
    weakly_fixed_criterion,
)
from .ideals_filters import (
    Filter,
    FilterSpace,
    IdealOfS,
    OrderIdealOfE,
    beta_act,
    enumerate_ideals,
    filter_space,
    hull,
    hull_tight,
    invariant_subsets,
    kernel,
    saturate,
)
from .relations import (
    EquivalenceRelation,
    SemigroupHomomorphism,
    centralizer,
    h_and_mu,
    injectivity_criteria,
)
from .selfsimilar import (
    SSTriple,
    SelfSimilarAction,
    TrivialPairSet,
    act_on_path,
    all_rees_ss,
    condition_M_ss,
    faithfulness,
    hereditary_invariant_sets,
    quotient_action,
    ss_semigroup,
    strongly_fixed_finite,
    triple_multiply,
    validate_action,
)
from .semilattice import (
    Cover,
    Semilattice,
    atoms_and_orthogonals,
    has_trapping_condition,
    is_0_disjunctive,
    is_cover,
)
from .verify import verify_corpus, verify_instance

__all__ = [
    "Congruence",
    "Cover",
    "DirectedGraph",
    "EquivalenceRelation",
    "Filter",
    "FilterSpace",
    "FiniteGroupoid",
    "Germ",
    "GraphPath",
    "GroupoidMap",
    "IdealOfS",
    "InverseSemigroup",
    "NaturalOrder",
    "OrderIdealOfE",
    "PartialBijection",
    "QuotientSemigroup",
    "SSTriple",
    "SelfSimilarAction",
    "Semilattice",
    "SemigroupHomomorphism",
    "TrivialPairSet",
    "TruncatedGraphSemigroup",
    "act_on_path",
    "all_congruences_rees",
    "all_rees_ss",
    "atoms_and_orthogonals",
    "beta_act",
    "build_groupoids",
    "build_semigroup",
    "centralizer",
    "condition_K",
    "condition_L",
    "condition_M_ss",
    "congruence_closure",
    "double_arrow",
    "effectiveness",
    "enumerate_congruences",
    "enumerate_ideals",
    "faithfulness",
    "filter_space",
    "from_partial_bijections",
    "from_tables",
    "germ_of",
    "graph_conditions",
    "graph_semigroup",
    "h_and_mu",
    "has_trapping_condition",
    "hereditary_invariant_sets",
    "hereditary_sets",
    "hull",
    "hull_tight",
    "idempotents",
    "injectivity_criteria",
    "invariant_subsets",
    "is_0_disjunctive",
    "is_congruence_free",
    "is_cover",
    "kernel",
    "natural_order",
    "parse_graph",
    "quotient",
    "quotient_action",
    "quotient_graph",
    "reduction",
    "rees_congruence",
    "rees_quotient",
    "saturate",
    "semigroup_from_json",
    "ss_semigroup",
    "strongly_fixed_finite",
    "triple_multiply",
    "validate_action",
    "verify_corpus",
    "verify_instance",
    "verify_structure_theorems",
    "weakly_fixed_criterion",
]
