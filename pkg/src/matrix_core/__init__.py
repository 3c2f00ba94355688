from src.matrix_core.surd import Surd
from src.matrix_core.exchange_matrix import (
    CartanMatrix,
    ExchangeMatrix,
    SymmetrizedMatrix,
    are_equal_up_to_relabeling,
    cartan_counterpart,
    is_sign_skew_symmetric,
    is_skew_symmetrizable,
    mutate,
    mutate_sequence,
    skew_symmetrizer,
    symmetrized,
)

__all__ = [
    "CartanMatrix",
    "ExchangeMatrix",
    "Surd",
    "SymmetrizedMatrix",
    "are_equal_up_to_relabeling",
    "cartan_counterpart",
    "is_sign_skew_symmetric",
    "is_skew_symmetrizable",
    "mutate",
    "mutate_sequence",
    "skew_symmetrizer",
    "symmetrized",
]
