import pytest

from src.engine import (
    CoefficientPair,
    TropSemifield,
    build_exchange_graph,
    check_laurent_property,
    check_positivity,
    denominator_vector,
    exchange_graph_to_dot,
    exchange_monomials,
    exchange_pair_data,
    format_laurent,
    initial_seed,
    label_variables,
    matches_cluster_complex,
    normalize_ratio,
    root_seed,
    run_summary,
    seed_clusters,
    seed_mutate,
    trivial_seed,
    trop_add,
)
from src.matrix_core import ExchangeMatrix
from src.models import special_seed
from src.rootsys import clusters, root_system_of_type
from src.utils.errors import DomainError, NotSignSkewSymmetricError

A1 = root_system_of_type("A1")
A2 = root_system_of_type("A2")
A3 = root_system_of_type("A3")


def test_tropical_operations():
    assert trop_add((1, -2, 0), (0, 3, 0)) == (0, -2, 0)
    assert normalize_ratio((1, -2)) == CoefficientPair((1, 0), (0, 2))
    with pytest.raises(DomainError):
        CoefficientPair((1, 0), (1, 0))


def test_a2_pentagon():
    run = build_exchange_graph(root_seed(A2))
    assert run.closed
    assert len(run.seeds) == 5
    assert run.graph.number_of_edges() == 5
    texts = {format_laurent(v) for v in run.variable_list()}
    assert texts == {"x1", "x2", "(1+x2)/x1", "(1+x1)/x2", "(1+x1+x2)/(x1*x2)"}


def test_a1_exchange():
    run = build_exchange_graph(root_seed(A1))
    assert len(run.seeds) == 2
    assert sorted(str(v) for v in run.variable_list()) == ["2/x1", "x1"]


def test_b2_has_six_seeds():
    run = build_exchange_graph(root_seed(root_system_of_type("B2")))
    assert len(run.seeds) == 6
    assert len(run.variables) == 6


def test_mutation_is_an_involution_on_seeds():
    seed = root_seed(A3)
    for z in range(3):
        assert seed_mutate(seed_mutate(seed, z), z).key() == seed.key()


def test_exchange_monomials_follow_the_column():
    seed = root_seed(A2)
    plus, minus = exchange_monomials(seed, 0)
    assert str(plus) == "x2"
    assert str(minus) == "1"


def test_seed_errors():
    with pytest.raises(NotSignSkewSymmetricError):
        trivial_seed(ExchangeMatrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(IndexError):
        seed_mutate(root_seed(A2), 2)


def test_coefficients_mutate_with_the_seed():
    semifield = TropSemifield(("p1", "p2"))
    coeffs = [CoefficientPair((1, 0), (0, 0)), CoefficientPair((0, 1), (0, 0))]
    seed = initial_seed(ExchangeMatrix.from_rows([[0, 1], [-1, 0]]), semifield, coeffs)
    step = seed_mutate(seed, 0)
    assert step.coeffs[0] == CoefficientPair((0, 0), (1, 0))
    assert str(step.cluster[0]) == "(x2+p1)/x1"
    run = build_exchange_graph(seed)
    assert run.closed and len(run.seeds) == 5
    assert all(check_positivity(v) for v in run.variable_list())


def test_seed_cap_stops_the_search():
    run = build_exchange_graph(root_seed(A3), seed_cap=3)
    assert not run.closed
    assert len(run.seeds) == 3


def test_denominators_label_the_roots():
    run = build_exchange_graph(root_seed(A3))
    labels = label_variables(run, A3)
    assert set(labels) == set(A3.almost_positive_roots)
    assert denominator_vector(run.initial.cluster[0]) == (-1, 0, 0)
    assert all(check_positivity(v) for v in labels.values())


def test_exchange_graph_is_the_cluster_complex():
    run = build_exchange_graph(root_seed(A3))
    assert len(run.seeds) == 14
    assert len(run.variables) == len(A3.almost_positive_roots)
    assert matches_cluster_complex(run, A3)
    data = exchange_pair_data(run, A3)
    assert all((b, a) in data for a, b in data)


def test_seed_clusters_are_the_clusters():
    run = build_exchange_graph(root_seed(A3))
    found = seed_clusters(run, A3)
    assert len(found) == len(set(found)) == 14
    assert set(found) == {frozenset(c) for c in clusters(A3)}


def test_exchange_data_with_special_coefficients():
    for family, n in [("A", 3), ("B", 3)]:
        rs = root_system_of_type(f"{family}{n}")
        data = exchange_pair_data(build_exchange_graph(special_seed(family, n)), rs)
        assert data
        assert all((b, a) in data for a, b in data)
        assert any(any(entry.plus_coeff) or any(entry.minus_coeff) for entry in data.values())


def test_b3_closes_on_its_roots():
    B3 = root_system_of_type("B3")
    run = build_exchange_graph(root_seed(B3))
    assert len(run.seeds) == 20
    assert len(run.variables) == len(B3.almost_positive_roots)
    assert matches_cluster_complex(run, B3)


def test_laurent_phenomenon_from_other_seeds():
    run = build_exchange_graph(root_seed(A3))
    assert check_laurent_property(run, picks=2)


def test_exports():
    run = build_exchange_graph(root_seed(A2))
    assert exchange_graph_to_dot(run).startswith("graph exchange_graph {")
    summary = run_summary(run)
    assert summary["seeds"] == 5 and summary["edges"] == 5 and summary["closed"]


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
