from src.rootsys.root_system import (
    LatticeVector,
    RootSystem,
    build_root_system,
    cartan_matrix_of_type,
    exceptional_roots,
    format_root,
    parse_root,
    reflect,
    root_system_of_type,
)
from src.rootsys.compatibility import (
    are_compatible,
    are_exchangeable,
    compatibility_degree,
    k_epsilon,
    sign_eps,
    subplus,
    subplus_with_negative_simple,
    tau,
    tau_word,
)
from src.rootsys.cluster_complex import (
    COXETER_NUMBER_OF_WEIGHT,
    Cluster,
    GeodesicLoop,
    PseudomanifoldReport,
    adjacent_cluster,
    as_cluster,
    b_matrix_of_cluster,
    brute_force_clusters,
    check_mutation_law,
    check_partner_law,
    check_pseudomanifold,
    check_tau_antisymmetry,
    cluster_expansion,
    cluster_monomial_exponents,
    clusters,
    complex_exchange_graph,
    dihedral_order,
    exchange_partner,
    expansion_by_tau_reduction,
    geodesic_loops,
    initial_exchange_matrix,
    is_unimodular,
    loop_is_cycle,
    tau_matches_reflections,
)

__all__ = [
    "COXETER_NUMBER_OF_WEIGHT",
    "Cluster",
    "GeodesicLoop",
    "LatticeVector",
    "PseudomanifoldReport",
    "RootSystem",
    "adjacent_cluster",
    "are_compatible",
    "are_exchangeable",
    "as_cluster",
    "b_matrix_of_cluster",
    "brute_force_clusters",
    "build_root_system",
    "cartan_matrix_of_type",
    "check_mutation_law",
    "check_partner_law",
    "check_pseudomanifold",
    "check_tau_antisymmetry",
    "cluster_expansion",
    "cluster_monomial_exponents",
    "clusters",
    "compatibility_degree",
    "complex_exchange_graph",
    "dihedral_order",
    "exceptional_roots",
    "exchange_partner",
    "expansion_by_tau_reduction",
    "format_root",
    "geodesic_loops",
    "initial_exchange_matrix",
    "is_unimodular",
    "k_epsilon",
    "loop_is_cycle",
    "parse_root",
    "reflect",
    "root_system_of_type",
    "sign_eps",
    "subplus",
    "subplus_with_negative_simple",
    "tau",
    "tau_matches_reflections",
    "tau_word",
]
