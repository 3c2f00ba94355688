from src.diagram.diagram import (
    Diagram,
    component_vertex_sets,
    connected_components,
    diagram_from_matrix,
    diagram_mutate,
    diagram_mutate_sequence,
    diagram_of,
    diagram_to_matrix,
    is_connected,
)
from src.diagram.canonical import CanonicalDiagram, are_isomorphic, canonical_form, canonical_order
from src.diagram.cartan_type import CartanKillingType
from src.diagram.mutation_class import (
    MutationClassResult,
    are_mutation_equivalent,
    class_graph,
    class_to_dot,
    is_2_finite,
    is_2_finite_matrix,
    mutation_class,
)
from src.diagram.recognition import (
    check_cycle_law,
    check_triangle_law,
    classify_cycle,
    clear_class_cache,
    dynkin_shape,
    recognize_matrix_type,
    recognize_type,
)

__all__ = [
    "CanonicalDiagram",
    "CartanKillingType",
    "Diagram",
    "MutationClassResult",
    "are_isomorphic",
    "are_mutation_equivalent",
    "canonical_form",
    "canonical_order",
    "check_cycle_law",
    "check_triangle_law",
    "class_graph",
    "class_to_dot",
    "classify_cycle",
    "clear_class_cache",
    "component_vertex_sets",
    "connected_components",
    "diagram_from_matrix",
    "diagram_mutate",
    "diagram_mutate_sequence",
    "diagram_of",
    "diagram_to_matrix",
    "dynkin_shape",
    "is_2_finite",
    "is_2_finite_matrix",
    "is_connected",
    "mutation_class",
    "recognize_matrix_type",
    "recognize_type",
]
