import pytest

from src.diagram import (
    CartanKillingType,
    Diagram,
    are_isomorphic,
    are_mutation_equivalent,
    canonical_form,
    check_cycle_law,
    check_triangle_law,
    class_to_dot,
    classify_cycle,
    clear_class_cache,
    connected_components,
    diagram_mutate,
    diagram_of,
    is_2_finite,
    is_2_finite_matrix,
    mutation_class,
    recognize_matrix_type,
    recognize_type,
)
from src.diagram.corpus import (
    all_tree_orientations,
    crown_diagram,
    cycle_diagram,
    dynkin_diagram,
    extended_dynkin_diagram,
    non_cyclic_cycle_corpus,
    t_diagram,
)
from src.diagram.recognition import _CLASS_CACHE
from src.matrix_core import ExchangeMatrix, mutate
from src.utils.errors import InputError, RealizabilityError
from src.utils.validation import validate_diagram

A3_PATH = Diagram.from_edges(3, [(0, 1), (1, 2)])
A3_TRIANGLE = cycle_diagram([1, 1, 1])
B3_TRIANGLE = cycle_diagram([2, 2, 1])
BAD_TRIANGLE = cycle_diagram([2, 2, 2])


def test_diagram_of_matrix():
    B = ExchangeMatrix.from_rows([[0, 1], [-2, 0]])
    assert diagram_of(B).edges == ((0, 1, 2),)


def test_diagram_mutation_matches_matrix_mutation():
    B = ExchangeMatrix.from_rows([[0, 1, 0], [-2, 0, 1], [0, -1, 0]])
    for k in range(3):
        assert diagram_of(mutate(B, k)) == diagram_mutate(diagram_of(B), k)


def test_path_mutates_into_oriented_triangle():
    assert are_isomorphic(diagram_mutate(A3_PATH, 1), A3_TRIANGLE)


def test_unrealizable_triangle():
    with pytest.raises(RealizabilityError):
        diagram_mutate(BAD_TRIANGLE, 0)
    assert not is_2_finite(BAD_TRIANGLE)


def test_canonical_form_ignores_labels():
    gamma = dynkin_diagram("D", 5)
    assert canonical_form(gamma) == canonical_form(gamma.relabel([4, 2, 0, 3, 1]))
    assert canonical_form(A3_PATH) != canonical_form(A3_TRIANGLE)


def test_mutation_class_of_a3():
    result = mutation_class(A3_PATH)
    assert result.closed
    assert len(result) == 4
    assert check_triangle_law(result)
    assert check_cycle_law(result)
    assert "graph mutation_class {" in class_to_dot(result)


def test_mutation_class_weight_cap():
    result = mutation_class(Diagram.from_edges(2, [(0, 1, 4)]), weight_cap=3)
    assert not result.closed
    assert result.reason == "weight_cap"


def test_recognize_dynkin_types():
    assert recognize_type(dynkin_diagram("E", 6)) == CartanKillingType.parse("E6")
    assert recognize_type(dynkin_diagram("G", 2)) == CartanKillingType.parse("G2")
    assert str(recognize_type(cycle_diagram([1, 1, 1, 1]))) == "D4"
    assert str(recognize_type(B3_TRIANGLE)) == "B3"


def test_recognize_rejects_two_infinite():
    assert recognize_type(extended_dynkin_diagram("D", 4)) is None
    assert recognize_type(cycle_diagram([1, 1, 1], [True, True, False])) is None
    assert recognize_type(Diagram.from_edges(2, [(0, 1, 4)])) is None


def test_long_non_cyclic_cycles_are_infinite():
    long_cycles = [gamma for gamma in non_cyclic_cycle_corpus(8) if gamma.n >= 7]
    assert long_cycles
    for gamma in long_cycles:
        assert recognize_type(gamma) is None


def test_class_cache_can_be_cleared():
    assert str(recognize_type(cycle_diagram([1, 1, 1, 1]))) == "D4"
    assert _CLASS_CACHE
    clear_class_cache()
    assert not _CLASS_CACHE
    assert str(recognize_type(cycle_diagram([1, 1, 1, 1]))) == "D4"


def test_recognize_disconnected():
    gamma = Diagram.from_edges(3, [(0, 1)])
    assert str(recognize_type(gamma)) == "A1×A2"
    assert len(connected_components(gamma)) == 2


def test_recognize_matrix_tells_b_from_c():
    b3 = ExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -2, 0]])
    c3 = ExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 2], [0, -1, 0]])
    assert str(recognize_matrix_type(b3)) == "B3"
    assert str(recognize_matrix_type(c3)) == "C3"


def test_is_2_finite_matrix():
    assert is_2_finite_matrix(ExchangeMatrix.from_rows([[0, 1], [-3, 0]]))
    assert not is_2_finite_matrix(ExchangeMatrix.from_rows([[0, 2], [-2, 0]]))
    assert not is_2_finite_matrix(ExchangeMatrix.from_rows([[0, 1], [1, 0]]))


def test_classify_cycle():
    assert str(classify_cycle(cycle_diagram([1, 1, 1, 1, 1]))) == "D5"
    assert str(classify_cycle(A3_TRIANGLE)) == "A3"
    assert str(classify_cycle(B3_TRIANGLE)) == "B3"
    assert str(classify_cycle(cycle_diagram([2, 1, 2, 1]))) == "F4"
    assert classify_cycle(cycle_diagram([1, 1, 1, 1], [True, False, True, True])) is None


def test_tree_orientations():
    assert len(all_tree_orientations(dynkin_diagram("A", 3))) == 3


def test_crown_equivalence():
    assert are_mutation_equivalent(crown_diagram(1, 1, 1, 1), t_diagram(1, 1, 1))
    assert not are_mutation_equivalent(A3_PATH, Diagram.from_edges(3, [(0, 1)]))


def test_validate_diagram():
    gamma = validate_diagram({"n": 3, "edges": [{"tail": 1, "head": 2}, {"tail": 3, "head": 2, "w": 2}]})
    assert gamma.edges == ((0, 1, 1), (2, 1, 2))
    with pytest.raises(InputError):
        validate_diagram({"n": 2, "edges": [{"tail": 1}]})
    with pytest.raises(InputError):
        validate_diagram({"n": 2, "edges": [{"tail": 1, "head": 1}]})


if __name__ == '__main__':
    tests = [(name, f) for name, f in sorted(globals().items()) if name.startswith('test_') and callable(f)]
    failed = 0
    for name, f in tests:
        try:
            f()
            print(f"  ok    {name}")
        except Exception as e:
            failed += 1
            print(f"  FAIL  {name}: {e}")
    print(f"\n{len(tests) - failed}/{len(tests)} tests passed")
