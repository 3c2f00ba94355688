from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple

from src.rootsys.root_system import LatticeVector, RootSystem, format_root
from src.utils.errors import DomainError


def tau(rs: RootSystem, eps: int, gamma: Sequence[int]) -> LatticeVector:
    """
    The piecewise-linear involution tau_eps of the root lattice.

    Coordinates i in I_eps become -g_i - sum_{j != i} a_ij max(g_j, 0);
    the others are kept.
    """
    out = list(gamma)
    for i in range(rs.n):
        if rs.signs[i] != eps:
            continue
        out[i] = -gamma[i] - sum(rs.cartan[i, j] * max(gamma[j], 0) for j in range(rs.n) if j != i)
    return tuple(out)


def tau_word(rs: RootSystem, eps: int, k: int, gamma: Sequence[int]) -> LatticeVector:
    """tau^{(k)}_eps: k alternating factors, tau_eps applied first."""
    out = tuple(gamma)
    sign = eps
    for _ in range(k):
        out = tau(rs, sign, out)
        sign = -sign
    return out


def _check_root(rs: RootSystem, beta: Sequence[int]):
    if not rs.is_almost_positive(beta):
        raise DomainError(f"{format_root(beta)} is not an almost positive root")


@lru_cache(maxsize=None)
def k_epsilon(rs: RootSystem, beta: LatticeVector, eps: int) -> int:
    """
    Smallest k >= 0 such that tau^{(k)}_eps(beta) is a negative simple root
    fixed by the next factor of the alternating word.
    """
    beta = tuple(beta)
    _check_root(rs, beta)
    bound = rs.coxeter_number_of(beta) + 1
    current = beta
    sign = eps
    for k in range(bound + 1):
        j = rs.negative_simple_index(current)
        if j is not None and rs.signs[j] != sign:
            return k
        current = tau(rs, sign, current)
        sign = -sign
    raise DomainError(f"tau-reduction of {format_root(beta)} did not stop within {bound} steps")


def reduce_to_negative_simple(rs: RootSystem, alpha: LatticeVector) -> Tuple[int, int]:
    """(k, i) with tau^{(k)}_+(alpha) = -a_i and k = k_+(alpha)."""
    k = k_epsilon(rs, tuple(alpha), 1)
    image = tau_word(rs, 1, k, alpha)
    return k, rs.negative_simple_index(image)


@lru_cache(maxsize=None)
def compatibility_degree(rs: RootSystem, alpha: LatticeVector, beta: LatticeVector) -> int:
    """
    (alpha || beta): move alpha to a negative simple root -a_i by the
    alternating tau word, apply the same word to beta and read max([beta:a_i], 0).
    """
    alpha, beta = tuple(alpha), tuple(beta)
    _check_root(rs, beta)
    k, i = reduce_to_negative_simple(rs, alpha)
    image = tau_word(rs, 1, k, beta)
    return max(image[i], 0)


def are_compatible(rs: RootSystem, alpha: LatticeVector, beta: LatticeVector) -> bool:
    return compatibility_degree(rs, tuple(alpha), tuple(beta)) == 0


def are_exchangeable(rs: RootSystem, beta: LatticeVector, beta2: LatticeVector) -> bool:
    beta, beta2 = tuple(beta), tuple(beta2)
    return compatibility_degree(rs, beta, beta2) == 1 and compatibility_degree(rs, beta2, beta) == 1


def sign_eps(rs: RootSystem, beta: LatticeVector, beta2: LatticeVector) -> int:
    """The unique sign eps with k_eps(beta) < k_eps(beta2)."""
    beta, beta2 = tuple(beta), tuple(beta2)
    if not are_exchangeable(rs, beta, beta2):
        raise DomainError(f"{format_root(beta)} and {format_root(beta2)} are not exchangeable")
    for eps in (1, -1):
        if k_epsilon(rs, beta, eps) < k_epsilon(rs, beta2, eps):
            return eps
    raise DomainError(f"no sign separates the k-counters of {format_root(beta)} and {format_root(beta2)}")


def dihedral_words(rs: RootSystem, bound: int) -> List[Tuple[int, int]]:
    """(first sign, length) for the words tau^{(k)}_eps with k <= bound."""
    return [(eps, k) for eps in (1, -1) for k in range(bound + 1)]


def _apply_inverse(rs: RootSystem, eps: int, k: int, gamma: Sequence[int]) -> LatticeVector:
    # the inverse of tau^{(k)}_eps applies the same involutions in reverse order
    signs = [eps if step % 2 == 0 else -eps for step in range(k)]
    out = tuple(gamma)
    for sign in reversed(signs):
        out = tau(rs, sign, out)
    return out


@lru_cache(maxsize=None)
def subplus(rs: RootSystem, beta: LatticeVector, beta2: LatticeVector) -> LatticeVector:
    """
    beta ⊎ beta2: the element of {s^-1(s(beta) + s(beta2))}, s in <tau+, tau->,
    other than beta + beta2. Zero when the orbit has a single element (rank 1).
    """
    beta, beta2 = tuple(beta), tuple(beta2)
    if not are_exchangeable(rs, beta, beta2):
        raise DomainError(f"{format_root(beta)} and {format_root(beta2)} are not exchangeable")
    total = tuple(a + b for a, b in zip(beta, beta2))
    bound = 2 * (rs.coxeter_number_of(beta) + 2)
    found = set()
    for eps, k in dihedral_words(rs, bound):
        image = tuple(a + b for a, b in zip(tau_word(rs, eps, k, beta), tau_word(rs, eps, k, beta2)))
        found.add(_apply_inverse(rs, eps, k, image))
    found.discard(total)
    if not found:
        return tuple(0 for _ in beta)
    if len(found) > 1:
        raise DomainError(f"{format_root(beta)} and {format_root(beta2)} give more than two sums")
    return found.pop()


def subplus_with_negative_simple(rs: RootSystem, j: int, beta: LatticeVector) -> LatticeVector:
    """(-a_j) ⊎ beta = beta - a_j + sum_{i != j} a_ij a_i, the closed form."""
    out = list(beta)
    out[j] -= 1
    for i in range(rs.n):
        if i != j:
            out[i] += rs.cartan[i, j]
    return tuple(out)
