from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.matrix_core import ExchangeMatrix, mutate
from src.rootsys.compatibility import are_compatible, compatibility_degree, sign_eps, subplus, tau
from src.rootsys.root_system import LatticeVector, RootSystem, format_root, reflect
from src.utils.errors import DomainError

Cluster = Tuple[LatticeVector, ...]

# loop length is h + 2 where 2cos(pi/h) = sqrt(weight)
COXETER_NUMBER_OF_WEIGHT = {0: 2, 1: 3, 2: 4, 3: 6}


@lru_cache(maxsize=None)
def root_positions(rs: RootSystem) -> Dict[LatticeVector, int]:
    return {v: p for p, v in enumerate(rs.almost_positive_roots)}


def as_cluster(rs: RootSystem, roots: Sequence[Sequence[int]]) -> Cluster:
    """Roots as a cluster tuple in the fixed root order."""
    positions = root_positions(rs)
    return tuple(sorted((tuple(r) for r in roots), key=lambda v: positions[v]))


@lru_cache(maxsize=None)
def compatibility_graph(rs: RootSystem) -> nx.Graph:
    roots = rs.almost_positive_roots
    G = nx.Graph()
    G.add_nodes_from(roots)
    for a, b in combinations(roots, 2):
        if compatibility_degree(rs, a, b) == 0:
            G.add_edge(a, b)
    return G


@lru_cache(maxsize=None)
def clusters(rs: RootSystem) -> Tuple[Cluster, ...]:
    """Maximal sets of mutually compatible almost positive roots."""
    positions = root_positions(rs)
    found = [as_cluster(rs, clique) for clique in nx.find_cliques(compatibility_graph(rs))]
    for c in found:
        if len(c) != rs.n:
            raise DomainError(f"maximal compatible set of size {len(c)} in rank {rs.n}")
    return tuple(sorted(found, key=lambda c: [positions[v] for v in c]))


def brute_force_clusters(rs: RootSystem) -> List[Cluster]:
    """Maximal compatible sets by exhaustive extension, without networkx."""
    roots = rs.almost_positive_roots
    ok = {(a, b): compatibility_degree(rs, a, b) == 0 and compatibility_degree(rs, b, a) == 0
          for a in roots for b in roots}
    out: List[Cluster] = []

    def extend(chosen: List[LatticeVector], start: int):
        grew = False
        for p in range(start, len(roots)):
            candidate = roots[p]
            if all(ok[(candidate, c)] for c in chosen):
                grew = True
                extend(chosen + [candidate], p + 1)
        if grew:
            return
        if not any(r not in chosen and all(ok[(r, c)] for c in chosen) for r in roots):
            out.append(tuple(chosen))

    extend([], 0)
    return out


def is_unimodular(cluster: Cluster) -> bool:
    M = np.array(cluster, dtype=np.int64).T
    return round(abs(np.linalg.det(M))) == 1


def _solve(cluster: Cluster, gamma: Sequence[int]) -> Optional[Tuple[int, ...]]:
    M = np.array(cluster, dtype=np.int64).T
    coeffs = np.rint(np.linalg.solve(M.astype(float), np.array(gamma, dtype=float))).astype(np.int64)
    if not np.array_equal(M @ coeffs, np.array(gamma, dtype=np.int64)):
        return None
    return tuple(int(c) for c in coeffs)


@lru_cache(maxsize=None)
def cluster_expansion(rs: RootSystem, gamma: LatticeVector) -> Dict[LatticeVector, int]:
    """
    The unique way to write gamma as a nonnegative combination of mutually
    compatible roots, found by scanning the clusters.
    """
    gamma = tuple(gamma)
    if not any(gamma):
        return {}
    for cluster in clusters(rs):
        coeffs = _solve(cluster, gamma)
        if coeffs is not None and min(coeffs) >= 0:
            return {root: c for root, c in zip(cluster, coeffs) if c > 0}
    raise DomainError(f"no cluster expansion found for {format_root(gamma)}")


def expansion_by_tau_reduction(rs: RootSystem, gamma: Sequence[int]) -> Dict[LatticeVector, int]:
    """
    Cluster expansion computed without clusters.

    The negative coordinates of gamma give the negative simple components
    directly; the nonnegative part is pushed through tau_+ and tau_- in
    turn and the components found on the way are pulled back.
    """
    bound = rs.max_coxeter_number + 2

    def expand(vector: Tuple[int, ...], eps: int, depth: int) -> Dict[LatticeVector, int]:
        out: Dict[LatticeVector, int] = {}
        for i, c in enumerate(vector):
            if c < 0:
                out[rs.negative_simple(i)] = -c
        positive = tuple(max(c, 0) for c in vector)
        if not any(positive):
            return out
        if depth > bound:
            raise DomainError(f"tau-reduction of {format_root(gamma)} did not terminate")
        for root, c in expand(tau(rs, eps, positive), -eps, depth + 1).items():
            pulled = tau(rs, eps, root)
            out[pulled] = out.get(pulled, 0) + c
        return out

    return expand(tuple(gamma), 1, 0)


def cluster_monomial_exponents(rs: RootSystem, gamma: Sequence[int]) -> Dict[LatticeVector, int]:
    """Exponents of the cluster monomial x[gamma] = prod x[a]^{[gamma:a]_clus}."""
    return dict(cluster_expansion(rs, tuple(gamma)))


def exchange_partner(rs: RootSystem, cluster: Cluster, beta: LatticeVector) -> LatticeVector:
    beta = tuple(beta)
    if beta not in cluster:
        raise DomainError(f"{format_root(beta)} is not in the cluster")
    rest = [c for c in cluster if c != beta]
    partners = [r for r in rs.almost_positive_roots
                if r not in cluster and all(are_compatible(rs, r, c) for c in rest)]
    if len(partners) != 1:
        raise DomainError(f"{len(partners)} exchange partners for {format_root(beta)}")
    return partners[0]


def adjacent_cluster(rs: RootSystem, cluster: Cluster, beta: LatticeVector) -> Tuple[Cluster, LatticeVector]:
    """The unique cluster sharing every root of `cluster` except beta, and the root that replaces it."""
    partner = exchange_partner(rs, cluster, beta)
    return as_cluster(rs, [c for c in cluster if c != tuple(beta)] + [partner]), partner


def b_matrix_entry(rs: RootSystem, cluster: Cluster, alpha: LatticeVector, beta: LatticeVector) -> int:
    if alpha == beta:
        return 0
    partner = exchange_partner(rs, cluster, beta)
    total = tuple(a + b for a, b in zip(beta, partner))
    other = subplus(rs, beta, partner)
    value = cluster_expansion(rs, total).get(alpha, 0) - cluster_expansion(rs, other).get(alpha, 0)
    return sign_eps(rs, beta, partner) * value


def b_matrix_of_cluster(rs: RootSystem, cluster: Sequence[Sequence[int]]) -> ExchangeMatrix:
    """B(C) with rows and columns in the given root order, labels from format_root."""
    cluster = tuple(tuple(r) for r in cluster)
    rows = [[b_matrix_entry(rs, cluster, a, b) for b in cluster] for a in cluster]
    return ExchangeMatrix.from_rows(rows, [format_root(r) for r in cluster])


def initial_exchange_matrix(rs: RootSystem) -> ExchangeMatrix:
    """B(-Pi) in the order -a_1, ..., -a_n: b_ij = eps(i) a_ij off the diagonal."""
    return b_matrix_of_cluster(rs, rs.negative_simples)


@lru_cache(maxsize=None)
def complex_exchange_graph(rs: RootSystem) -> nx.Graph:
    """Clusters as nodes; an edge for each shared wall, labeled with the exchanged roots."""
    G = nx.Graph()
    all_clusters = clusters(rs)
    G.add_nodes_from(all_clusters)
    walls: Dict[FrozenSet[LatticeVector], List[Cluster]] = {}
    for c in all_clusters:
        for beta in c:
            walls.setdefault(frozenset(r for r in c if r != beta), []).append(c)
    for wall, members in walls.items():
        if len(members) == 2:
            a, b = members
            gone = next(r for r in a if r not in wall)
            came = next(r for r in b if r not in wall)
            G.add_edge(a, b, exchanged=(gone, came))
    return G


@dataclass(frozen=True)
class GeodesicLoop:
    fixed: Cluster
    length: int
    weight: int

    @property
    def expected_length(self) -> int:
        return COXETER_NUMBER_OF_WEIGHT[self.weight] + 2


def geodesic_loops(rs: RootSystem) -> List[GeodesicLoop]:
    """
    One loop per (n-2)-subset D of a cluster: the clusters containing D,
    with the weight |b_ab b_ba| of the two remaining roots.
    """
    if rs.n < 2:
        return []
    containing: Dict[Cluster, List[Cluster]] = {}
    for c in clusters(rs):
        for fixed in combinations(c, rs.n - 2):
            containing.setdefault(fixed, []).append(c)
    loops = []
    for fixed in sorted(containing, key=lambda f: [root_positions(rs)[v] for v in f]):
        members = containing[fixed]
        a, b = [r for r in members[0] if r not in fixed]
        weight = abs(b_matrix_entry(rs, members[0], a, b) * b_matrix_entry(rs, members[0], b, a))
        loops.append(GeodesicLoop(fixed, len(members), weight))
    return loops


def loop_is_cycle(rs: RootSystem, loop: GeodesicLoop) -> bool:
    members = [c for c in clusters(rs) if all(r in c for r in loop.fixed)]
    H = complex_exchange_graph(rs).subgraph(members)
    return nx.is_connected(H) and all(d == 2 for _, d in H.degree()) if len(members) > 2 else len(members) == 2


def tau_permutation(rs: RootSystem, eps: int) -> Dict[LatticeVector, LatticeVector]:
    return {v: tau(rs, eps, v) for v in rs.almost_positive_roots}


def dihedral_order(rs: RootSystem) -> int:
    """Order of tau_- tau_+ as a permutation of the almost positive roots."""
    plus, minus = tau_permutation(rs, 1), tau_permutation(rs, -1)
    order = 1
    for start in rs.almost_positive_roots:
        length, current = 0, start
        while True:
            current = minus[plus[current]]
            length += 1
            if current == start:
                break
        order = lcm(order, length)
    return order


def tau_matches_reflections(rs: RootSystem) -> bool:
    """tau_eps equals the product of s_i over I_eps, except on the negative simples it fixes."""
    for eps in (1, -1):
        for v in rs.almost_positive_roots:
            j = rs.negative_simple_index(v)
            if j is not None and rs.signs[j] != eps:
                expected = v
            else:
                expected = v
                for i in range(rs.n):
                    if rs.signs[i] == eps:
                        expected = reflect(rs.cartan, i, expected)
            if tau(rs, eps, v) != expected:
                return False
    return True


@dataclass
class PseudomanifoldReport:
    walls_in_two_clusters: bool
    dual_graph_connected: bool
    links_connected: bool
    all_unimodular: bool
    bad_faces: List[Cluster] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.walls_in_two_clusters and self.dual_graph_connected and self.links_connected and self.all_unimodular


def check_pseudomanifold(rs: RootSystem) -> PseudomanifoldReport:
    all_clusters = clusters(rs)
    G = complex_exchange_graph(rs)
    walls: Dict[FrozenSet[LatticeVector], int] = {}
    faces: Dict[FrozenSet[LatticeVector], List[Cluster]] = {}
    for c in all_clusters:
        for size in range(0, rs.n - 1):
            for face in combinations(c, size):
                faces.setdefault(frozenset(face), []).append(c)
        for beta in c:
            wall = frozenset(r for r in c if r != beta)
            walls[wall] = walls.get(wall, 0) + 1
    bad = [as_cluster(rs, face) for face, members in faces.items()
           if not nx.is_connected(G.subgraph(members))]
    return PseudomanifoldReport(
        walls_in_two_clusters=all(count == 2 for count in walls.values()),
        dual_graph_connected=nx.is_connected(G),
        links_connected=not bad,
        all_unimodular=all(is_unimodular(c) for c in all_clusters),
        bad_faces=bad,
    )


def check_mutation_law(rs: RootSystem) -> bool:
    """B(C') = mu_beta(B(C)) along every edge, with the new root in the old position."""
    for a, b, data in complex_exchange_graph(rs).edges(data=True):
        gone, came = data["exchanged"]
        if gone not in a:
            a, b = b, a
        position = a.index(gone)
        aligned = list(a)
        aligned[position] = came
        before = b_matrix_of_cluster(rs, a)
        after = b_matrix_of_cluster(rs, aligned)
        if mutate(before, position).rows != after.rows:
            return False
    return True


def check_partner_law(rs: RootSystem) -> bool:
    """b_ab(C) = 0 exactly when the exchange partners of a and b are compatible."""
    for c in clusters(rs):
        partners = {r: exchange_partner(rs, c, r) for r in c}
        for a in c:
            for b in c:
                if a == b:
                    continue
                zero = b_matrix_entry(rs, c, a, b) == 0
                if zero != are_compatible(rs, partners[a], partners[b]):
                    return False
    return True


def check_tau_antisymmetry(rs: RootSystem) -> bool:
    """b_{tau a, tau b}(tau C) = -b_ab(C) for both signs."""
    for eps in (1, -1):
        for c in clusters(rs):
            image = tuple(tau(rs, eps, r) for r in c)
            for a in c:
                for b in c:
                    if b_matrix_entry(rs, image, tau(rs, eps, a), tau(rs, eps, b)) != -b_matrix_entry(rs, c, a, b):
                        return False
    return True
