from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.engine.laurent import LaurentExpression, LaurentRing
from src.engine.semifield import (
    CoefficientPair,
    TropElement,
    TropSemifield,
    normalize_ratio,
    trop_div,
    trop_mul,
    trop_pow,
)
from src.matrix_core import ExchangeMatrix, is_sign_skew_symmetric, mutate
from src.rootsys import RootSystem, initial_exchange_matrix
from src.utils.errors import InputError, NotSignSkewSymmetricError


@dataclass(frozen=True)
class Seed:
    """
    A cluster of Laurent expressions in the initial variables, one normalized
    coefficient pair per position and the exchange matrix aligned with them.
    """
    cluster: Tuple[LaurentExpression, ...]
    coeffs: Tuple[CoefficientPair, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        n = self.matrix.n
        if len(self.cluster) != n or len(self.coeffs) != n:
            raise InputError(f"seed of rank {n} needs {n} variables and {n} coefficient pairs")
        if not is_sign_skew_symmetric(self.matrix):
            raise NotSignSkewSymmetricError("seed matrix must be sign-skew-symmetric")

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def ring(self) -> LaurentRing:
        return self.cluster[0].ring

    def key(self) -> Tuple:
        """Identity modulo simultaneous relabeling: positions sorted by variable."""
        canonical = self.canonical()
        return (
            tuple(v.key for v in canonical.cluster),
            tuple((c.plus, c.minus) for c in canonical.coeffs),
            canonical.matrix.rows,
        )

    def canonical(self) -> 'Seed':
        order = sorted(range(self.n), key=lambda i: self.cluster[i].key)
        if order == list(range(self.n)):
            return self
        return Seed(
            tuple(self.cluster[i] for i in order),
            tuple(self.coeffs[i] for i in order),
            self.matrix.relabel(order),
        )

    def position_of(self, variable: LaurentExpression) -> int:
        for i, v in enumerate(self.cluster):
            if v.key == variable.key:
                return i
        raise InputError(f"{variable} is not in the cluster")

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_dict(),
            "coeff_pairs": [c.to_list() for c in self.coeffs],
            "semifield": list(self.ring.semifield.generators),
            "cluster": [str(v) for v in self.cluster],
        }


def initial_seed(matrix: ExchangeMatrix, semifield: TropSemifield = TropSemifield(),
                 coeffs: Optional[Sequence[CoefficientPair]] = None, prefix: str = "x") -> Seed:
    """The seed (x_1..x_n, p, B) on fresh variables; trivial coefficients when none are given."""
    lring = LaurentRing(matrix.n, semifield, prefix)
    if coeffs is None:
        coeffs = [CoefficientPair.trivial(semifield.m)] * matrix.n
    for pair in coeffs:
        if len(pair.plus) != semifield.m:
            raise InputError(f"coefficient pairs need {semifield.m} exponents")
    return Seed(tuple(lring.variable(i) for i in range(matrix.n)), tuple(coeffs), matrix)


def trivial_seed(matrix: ExchangeMatrix) -> Seed:
    """Coefficient-free seed, P = Trop()."""
    return initial_seed(matrix)


def exchange_monomials(seed: Seed, z: int) -> Tuple[LaurentExpression, LaurentExpression]:
    """prod_{b_xz > 0} x^{b_xz} and prod_{b_xz < 0} x^{-b_xz} over the cluster."""
    lring = seed.ring
    plus, minus = lring.constant(1), lring.constant(1)
    for x in range(seed.n):
        b = seed.matrix[x, z]
        if b > 0:
            plus = plus * seed.cluster[x] ** b
        elif b < 0:
            minus = minus * seed.cluster[x] ** (-b)
    return plus, minus


def exchange_exponents(seed: Seed, z: int) -> Tuple[List[int], List[int]]:
    """Exponents of the two exchange monomials over the cluster positions."""
    column = [seed.matrix[x, z] for x in range(seed.n)]
    return [max(b, 0) for b in column], [max(-b, 0) for b in column]


def mutated_coefficients(seed: Seed, z: int) -> Tuple[CoefficientPair, ...]:
    pz = seed.coeffs[z]
    out = []
    for x in range(seed.n):
        if x == z:
            out.append(pz.swapped())
            continue
        b = seed.matrix[z, x]
        base = pz.plus if b >= 0 else pz.minus
        ratio: TropElement = trop_mul(trop_pow(base, b), trop_div(seed.coeffs[x].plus, seed.coeffs[x].minus))
        out.append(normalize_ratio(ratio))
    return tuple(out)


def seed_mutate(seed: Seed, z: int) -> Seed:
    """
    Mutation in direction z.

    The new variable comes from z * z' = p+ M+ + p- M-, divided exactly in
    the Laurent ring; coefficients follow the ratio-then-normalize rule and
    the matrix is mutated at z.
    """
    if not 0 <= z < seed.n:
        raise IndexError(f"mutation position z={z} out of bounds for rank {seed.n}")
    lring = seed.ring
    plus, minus = exchange_monomials(seed, z)
    pz = seed.coeffs[z]
    rhs = lring.coefficient(pz.plus) * plus + lring.coefficient(pz.minus) * minus
    fresh = rhs.exact_divide(seed.cluster[z])
    matrix = mutate(seed.matrix, z)
    if not is_sign_skew_symmetric(matrix):
        raise NotSignSkewSymmetricError(f"mutation at position {z} leaves a matrix that is not sign-skew-symmetric")
    cluster = list(seed.cluster)
    cluster[z] = fresh
    return Seed(tuple(cluster), mutated_coefficients(seed, z), matrix)


def root_seed(rs: RootSystem, semifield: TropSemifield = TropSemifield(),
              coeffs: Optional[Sequence[CoefficientPair]] = None) -> Seed:
    """The seed at the negative simple roots: B(-Pi) with the given coefficients."""
    return initial_seed(initial_exchange_matrix(rs), semifield, coeffs)
