from src.models.polygon import (
    MIN_RANK,
    PLAIN,
    TILDE,
    Diagonal,
    PolygonModel,
    ThetaOrbit,
    model_compatibility_degree,
    model_orbits,
    orbit_from_dict,
    parse_model_type,
    polygon_model,
    root_diagonal_bijection,
    snake,
)
from src.models.triangulation import (
    EngineComparison,
    ModelRelation,
    Triangulation,
    b_matrix_from_relations,
    b_matrix_of_triangulation,
    check_flip_coherence,
    compare_with_engine,
    flip,
    flip_graph,
    flip_partner,
    model_clusters,
    model_exchange_relation,
    relation_in,
    side_semifield,
    special_coefficients,
    special_seed,
)
from src.models.geometric import (
    GeometricReport,
    compatible_monomial_independence,
    exchange_instances,
    verify_geometric_identities,
)

__all__ = [
    "MIN_RANK",
    "PLAIN",
    "TILDE",
    "Diagonal",
    "EngineComparison",
    "GeometricReport",
    "ModelRelation",
    "PolygonModel",
    "ThetaOrbit",
    "Triangulation",
    "b_matrix_from_relations",
    "b_matrix_of_triangulation",
    "check_flip_coherence",
    "compare_with_engine",
    "compatible_monomial_independence",
    "exchange_instances",
    "flip",
    "flip_graph",
    "flip_partner",
    "model_clusters",
    "model_compatibility_degree",
    "model_exchange_relation",
    "model_orbits",
    "orbit_from_dict",
    "parse_model_type",
    "polygon_model",
    "relation_in",
    "root_diagonal_bijection",
    "side_semifield",
    "snake",
    "special_coefficients",
    "special_seed",
    "verify_geometric_identities",
]
