import pytest

from src.models import (
    Diagonal,
    b_matrix_from_relations,
    b_matrix_of_triangulation,
    check_flip_coherence,
    compare_with_engine,
    compatible_monomial_independence,
    flip,
    flip_graph,
    model_clusters,
    model_exchange_relation,
    model_orbits,
    orbit_from_dict,
    parse_model_type,
    polygon_model,
    root_diagonal_bijection,
    snake,
    special_seed,
    verify_geometric_identities,
)
from src.rootsys import compatibility_degree, root_system_of_type
from src.utils.errors import DomainError, InputError


def test_diagonals_cross():
    assert Diagonal(1, 3).crosses(Diagonal(2, 4))
    assert not Diagonal(1, 3).crosses(Diagonal(3, 5))
    assert Diagonal(4, 2) == Diagonal(2, 4)
    with pytest.raises(InputError):
        Diagonal(2, 2)


def test_orbit_counts_match_roots():
    for family, n in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("B", 4)]:
        rs = root_system_of_type(f"{family}{n}")
        assert len(model_orbits(family, n)) == len(rs.almost_positive_roots)


def test_snake_holds_negative_simples():
    for family, n in [("A", 4), ("B", 3), ("C", 3), ("D", 4)]:
        start = snake(family, n)
        assert len(start) == n
        assert len(set(start.values())) == n


def test_bijection_preserves_degrees():
    for family, n in [("A", 3), ("B", 3), ("C", 3), ("D", 4)]:
        rs = root_system_of_type(f"{family}{n}")
        model = polygon_model(family, n)
        bijection = root_diagonal_bijection(family, n)
        for alpha, a in bijection.items():
            for beta, b in bijection.items():
                assert model.degree(a, b) == compatibility_degree(rs, alpha, beta)


def test_triangulation_counts():
    expected = {("A", 2): 5, ("A", 3): 14, ("B", 2): 6, ("B", 3): 20, ("C", 3): 20, ("D", 4): 50}
    for (family, n), count in expected.items():
        clusters = model_clusters(family, n)
        assert len(clusters) == count
        assert all(len(T) == n for T in clusters)


def test_pentagon_flip_graph_is_a_cycle():
    G = flip_graph("A", 2)
    assert G.number_of_nodes() == 5 and G.number_of_edges() == 5
    assert all(d == 2 for _, d in G.degree())


def test_flip_is_an_involution():
    model = polygon_model("B", 3)
    T = model_clusters("B", 3)[0]
    for z in T:
        image = flip(T, z, model)
        partner = next(iter(image - T))
        assert flip(image, partner, model) == T


def test_flip_graph_is_the_exchange_graph():
    for family, n in [("A", 3), ("B", 3), ("C", 3), ("D", 4)]:
        assert check_flip_coherence(family, n)


def test_triangle_rule_agrees_with_relations():
    for n in (2, 3, 4):
        model = polygon_model("A", n)
        for T in model_clusters("A", n)[:6]:
            T = sorted(T)
            B = b_matrix_of_triangulation(T, model)
            assert B == b_matrix_from_relations(T, model)
            assert all(abs(b) <= 1 for row in B.rows for b in row)


def test_triangle_rule_is_type_a_only():
    model = polygon_model("B", 3)
    with pytest.raises(DomainError):
        b_matrix_of_triangulation(list(model.snake), model)


def test_pentagon_relation():
    model = polygon_model("A", 2)
    z, w = model.orbit(3, 5), model.orbit(2, 4)
    relation = model_exchange_relation("A", 2, z, w)
    assert relation.variables(model, 1) == {model.orbit(2, 5): 1}
    assert relation.variables(model, -1) == {}
    assert len(relation.side_exponents(model, -1)) == 2


def test_non_exchangeable_orbits():
    model = polygon_model("A", 3)
    with pytest.raises(DomainError):
        model_exchange_relation("A", 3, model.orbit(1, 3), model.orbit(1, 4))


def test_special_seed_matches_engine():
    for family, n in [("A", 3), ("B", 3)]:
        seed = special_seed(family, n)
        assert seed.ring.semifield.m == len(polygon_model(family, n).sides)
        report = compare_with_engine(family, n)
        assert report.passed, report.mismatches[:3]
        assert report.seeds == len(model_clusters(family, n))


def test_geometric_identities():
    for family, n in [("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]:
        report = verify_geometric_identities(family, n)
        assert report.passed, report.failures[:3]


def test_cluster_monomials_are_independent():
    assert compatible_monomial_independence(2, 2)
    assert compatible_monomial_independence(3, 2)


def test_model_input_errors():
    with pytest.raises(InputError):
        polygon_model("C", 2)
    with pytest.raises(InputError):
        polygon_model("E", 6)
    with pytest.raises(InputError):
        parse_model_type("G2")
    assert parse_model_type("D5") == ("D", 5)
    model = polygon_model("D", 4)
    assert orbit_from_dict(model, {"diagonals": [[1, 5]], "color": "tilde"}) == model.orbit(1, 5, "tilde")
    with pytest.raises(InputError):
        orbit_from_dict(model, {"chords": []})


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
