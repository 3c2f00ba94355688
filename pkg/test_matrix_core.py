import numpy as np
import pytest

from src.matrix_core import (
    ExchangeMatrix,
    Surd,
    are_equal_up_to_relabeling,
    cartan_counterpart,
    is_sign_skew_symmetric,
    is_skew_symmetrizable,
    mutate,
    mutate_sequence,
    skew_symmetrizer,
    symmetrized,
)
from src.utils.errors import InputError, NotSkewSymmetrizableError, RealizabilityError
from src.utils.validation import dump_matrix, validate_matrix

B2 = ExchangeMatrix.from_rows([[0, 1], [-2, 0]])
A3 = ExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])


def test_mutation_negates_row_and_column():
    mutated = mutate(A3, 1)
    assert mutated.rows == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_mutation_is_an_involution():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(2, 7))
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                b = int(rng.integers(-3, 4))
                if b:
                    rows[i][j] = b
                    rows[j][i] = -int(np.sign(b)) * int(rng.integers(1, 4))
        B = ExchangeMatrix.from_rows(rows)
        for k in range(n):
            assert mutate(mutate(B, k), k) == B


def test_mutation_keeps_labels():
    B = ExchangeMatrix.from_rows([[0, 1], [-1, 0]], ["u", "v"])
    assert mutate(B, 0).labels == ("u", "v")


def test_mutation_index_out_of_range():
    with pytest.raises(IndexError):
        mutate(A3, 3)


def test_mutate_sequence_applies_in_order():
    assert mutate_sequence(A3, [0, 1]) == mutate(mutate(A3, 0), 1)
    assert mutate_sequence(A3, []) == A3


def test_sign_skew_symmetry():
    assert is_sign_skew_symmetric(B2)
    assert not is_sign_skew_symmetric(ExchangeMatrix.from_rows([[0, 1], [1, 0]]))
    assert not is_sign_skew_symmetric(ExchangeMatrix.from_rows([[0, 1], [0, 0]]))


def test_skew_symmetrizer_is_minimal():
    assert skew_symmetrizer(B2) == (2, 1)
    assert skew_symmetrizer(A3) == (1, 1, 1)
    G2 = ExchangeMatrix.from_rows([[0, 1], [-3, 0]])
    assert skew_symmetrizer(G2) == (3, 1)


def test_mutation_keeps_the_skew_symmetrizer():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(2, 6))
        d = rng.integers(1, 3, size=n)
        S = np.zeros((n, n), dtype=int)
        for i in range(n):
            for j in range(i + 1, n):
                S[i, j] = int(rng.integers(-2, 3))
                S[j, i] = -S[i, j]
        B = ExchangeMatrix.from_rows((S @ np.diag(d)).tolist())
        D = np.diag(skew_symmetrizer(B))
        for k in range(n):
            M = D @ np.array(mutate(B, k).rows)
            assert (M == -M.T).all()


def test_skew_symmetrizer_rejects_bad_cycle():
    B = ExchangeMatrix.from_rows([[0, 1, -1], [-1, 0, 2], [1, -1, 0]])
    assert skew_symmetrizer(B) is None
    assert not is_skew_symmetrizable(B)
    with pytest.raises(NotSkewSymmetrizableError):
        symmetrized(B)


def test_symmetrized_entries_are_surds():
    S = symmetrized(B2)
    assert S[0, 1] == Surd(1, 2)
    assert S[1, 0] == Surd(-1, 2)
    assert S[0, 0] == Surd(0)


def test_surd_arithmetic():
    assert Surd.from_signed_square(1, 8) == Surd(2, 2)
    assert Surd(1, 2) + Surd(1, 2) == Surd(2, 2)
    assert (Surd(1, 2) * Surd(1, 2)) == Surd(2)
    assert Surd(3, 2).square() == 18
    with pytest.raises(RealizabilityError):
        Surd(1, 2) + Surd(1, 3)


def test_cartan_counterpart():
    A = cartan_counterpart(B2)
    assert A.rows == ((2, -1), (-2, 2))


def test_relabeling_equality():
    swapped = A3.relabel([2, 1, 0])
    assert are_equal_up_to_relabeling(A3, swapped)
    assert not are_equal_up_to_relabeling(A3, mutate(A3, 1))


def test_dumped_matrix_reads_back():
    B = ExchangeMatrix.from_rows([[0, 2], [-1, 0]], ["u", "v"])
    data = dump_matrix(B)
    assert data == {"labels": ["u", "v"], "rows": [[0, 2], [-1, 0]]}
    assert validate_matrix(data) == B


def test_validate_matrix_errors():
    with pytest.raises(InputError):
        validate_matrix({"rows": [[0, 1], [1]]})
    with pytest.raises(InputError):
        validate_matrix({"rows": [[1, 0], [0, 0]]})
    with pytest.raises(InputError):
        validate_matrix({"labels": ["a"]})
    B = validate_matrix({"rows": [[0, 2], [-1, 0]]})
    assert B.labels == ("1", "2")


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
