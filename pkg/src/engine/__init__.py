from src.engine.semifield import (
    CoefficientPair,
    TropElement,
    TropSemifield,
    normalize_ratio,
    trop_add,
    trop_div,
    trop_mul,
    trop_pow,
)
from src.engine.laurent import LaurentExpression, LaurentRing, format_laurent
from src.engine.seed import (
    Seed,
    exchange_exponents,
    exchange_monomials,
    initial_seed,
    mutated_coefficients,
    root_seed,
    seed_mutate,
    trivial_seed,
)
from src.engine.exchange_graph import (
    EngineRun,
    build_exchange_graph,
    exchange_graph_to_dot,
    exchange_graph_to_networkx,
    run_summary,
)
from src.engine.labeling import (
    ExchangeData,
    check_laurent_property,
    check_positivity,
    denominator_vector,
    exchange_pair_data,
    label_variables,
    matches_cluster_complex,
    reexpand_from,
    seed_clusters,
)

__all__ = [
    "CoefficientPair",
    "EngineRun",
    "ExchangeData",
    "LaurentExpression",
    "LaurentRing",
    "Seed",
    "TropElement",
    "TropSemifield",
    "build_exchange_graph",
    "check_laurent_property",
    "check_positivity",
    "denominator_vector",
    "exchange_exponents",
    "exchange_graph_to_dot",
    "exchange_graph_to_networkx",
    "exchange_monomials",
    "exchange_pair_data",
    "format_laurent",
    "initial_seed",
    "label_variables",
    "matches_cluster_complex",
    "mutated_coefficients",
    "normalize_ratio",
    "reexpand_from",
    "root_seed",
    "run_summary",
    "seed_clusters",
    "seed_mutate",
    "trivial_seed",
    "trop_add",
    "trop_div",
    "trop_mul",
    "trop_pow",
]
