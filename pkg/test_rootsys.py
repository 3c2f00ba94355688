import pytest

from src.rootsys import (
    are_compatible,
    are_exchangeable,
    b_matrix_of_cluster,
    brute_force_clusters,
    check_mutation_law,
    check_partner_law,
    check_pseudomanifold,
    check_tau_antisymmetry,
    cluster_expansion,
    clusters,
    compatibility_degree,
    complex_exchange_graph,
    dihedral_order,
    exceptional_roots,
    expansion_by_tau_reduction,
    format_root,
    geodesic_loops,
    initial_exchange_matrix,
    is_unimodular,
    k_epsilon,
    loop_is_cycle,
    parse_root,
    root_system_of_type,
    sign_eps,
    subplus,
    subplus_with_negative_simple,
    tau,
    tau_matches_reflections,
)
from src.utils.errors import DomainError, InputError

A2 = root_system_of_type("A2")
A3 = root_system_of_type("A3")
B2 = root_system_of_type("B2")
B3 = root_system_of_type("B3")


def test_positive_root_counts():
    counts = {"A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E6": 36}
    for name, expected in counts.items():
        assert len(root_system_of_type(name).positive_roots) == expected


def test_bourbaki_short_root():
    assert (1, 2) in B2.positive_roots
    assert B2.squared_length((0, 1)) < B2.squared_length((1, 0))


def test_coxeter_numbers():
    for name, h in {"A3": 4, "B3": 6, "D4": 6, "G2": 6, "F4": 12, "E8": 30}.items():
        assert root_system_of_type(name).h == h


def test_c2_reads_as_b2():
    assert root_system_of_type("C2").positive_roots == B2.positive_roots


def test_tau_fixes_negative_simples_of_other_sign():
    for i in range(A3.n):
        v = A3.negative_simple(i)
        if A3.signs[i] > 0:
            assert tau(A3, -1, v) == v
        else:
            assert tau(A3, 1, v) == v
    assert tau_matches_reflections(A3)
    assert tau_matches_reflections(B3)


def test_compatibility_with_negative_simple():
    assert compatibility_degree(A2, (-1, 0), (1, 1)) == 1
    assert compatibility_degree(A2, (-1, 0), (0, 1)) == 0
    assert compatibility_degree(A2, (-1, 0), (0, -1)) == 0
    assert compatibility_degree(B2, (0, -1), (1, 2)) == 2
    assert are_compatible(A2, (1, 0), (1, 1))
    assert are_exchangeable(A2, (1, 0), (0, 1))


def test_compatibility_rejects_non_roots():
    with pytest.raises(DomainError):
        compatibility_degree(A2, (-1, 0), (2, 1))


def test_cluster_counts():
    for name, expected in {"A2": 5, "A3": 14, "B2": 6, "G2": 8, "B3": 20, "D4": 50}.items():
        rs = root_system_of_type(name)
        assert len(clusters(rs)) == expected
    assert {frozenset(c) for c in brute_force_clusters(A3)} == {frozenset(c) for c in clusters(A3)}


def test_clusters_are_unimodular():
    for c in clusters(B3):
        assert is_unimodular(c)


def test_cluster_expansion_agrees_with_tau_reduction():
    assert cluster_expansion(A2, (2, 1)) == {(1, 1): 1, (1, 0): 1}
    for gamma in [(1, -1, 2), (2, 2, 1), (-1, 0, -1), (0, 3, 1)]:
        assert cluster_expansion(A3, gamma) == expansion_by_tau_reduction(A3, gamma)


def test_initial_exchange_matrix_a2():
    assert initial_exchange_matrix(A2).rows == ((0, -1), (1, 0))
    assert b_matrix_of_cluster(A2, A2.negative_simples) == initial_exchange_matrix(A2)


def test_subplus_with_negative_simple():
    assert subplus(A2, (-1, 0), (1, 0)) == (0, -1)
    assert subplus_with_negative_simple(A2, 0, (1, 0)) == (0, -1)
    assert sign_eps(A2, (1, 0), (0, 1)) in (1, -1)
    with pytest.raises(DomainError):
        subplus(A2, (1, 0), (1, 1))


def test_exchange_graph_laws():
    assert check_mutation_law(A3)
    assert check_partner_law(A3)
    assert check_tau_antisymmetry(B3)
    assert check_pseudomanifold(B3).passed


def test_rank_two_exchange_graphs_are_polygons():
    for name, size in {"A1×A1": 4, "A2": 5, "B2": 6, "G2": 8}.items():
        G = complex_exchange_graph(root_system_of_type(name))
        assert G.number_of_nodes() == size
        assert all(d == 2 for _, d in G.degree())


def test_geodesic_loops():
    for name in ("A3", "B3"):
        rs = root_system_of_type(name)
        lengths = set()
        for loop in geodesic_loops(rs):
            assert loop.length == loop.expected_length
            assert loop_is_cycle(rs, loop)
            lengths.add(loop.length)
        if name == "A3":
            assert lengths == {4, 5}


def test_dihedral_orders():
    for name, order in {"A2": 5, "A3": 6, "B2": 3, "D4": 4, "G2": 4}.items():
        assert dihedral_order(root_system_of_type(name)) == order


def test_k_counter_identity():
    for name in ("A3", "B3", "C3", "D4", "F4", "G2"):
        rs = root_system_of_type(name)
        for beta in rs.almost_positive_roots:
            assert k_epsilon(rs, beta, 1) + k_epsilon(rs, beta, -1) == rs.h + 1


def test_exceptional_roots():
    assert sorted(exceptional_roots(root_system_of_type("G2"))) == [(2, 1), (3, 2)]
    assert sorted(exceptional_roots(root_system_of_type("F4"))) == [(1, 2, 3, 2), (2, 3, 4, 2)]
    assert exceptional_roots(B3) == []
    assert exceptional_roots(root_system_of_type("D5")) == []
    assert exceptional_roots(root_system_of_type("E8")) == [(2, 3, 4, 6, 5, 4, 3, 2)]


def test_root_text_round_trip():
    assert format_root((2, 1)) == "2α1+α2"
    assert format_root((0, -1)) == "-α2"
    assert parse_root("a1+a2", 2) == (1, 1)
    assert parse_root("[1,0,1]", 3) == (1, 0, 1)
    with pytest.raises(InputError):
        parse_root("α4", 3)


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
