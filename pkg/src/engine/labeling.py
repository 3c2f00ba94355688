from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from src.engine.exchange_graph import EngineRun, VariableKey, build_exchange_graph
from src.engine.laurent import LaurentExpression
from src.engine.seed import exchange_exponents, initial_seed
from src.engine.semifield import TropElement
from src.rootsys import (
    LatticeVector,
    RootSystem,
    cluster_monomial_exponents,
    complex_exchange_graph,
    format_root,
    initial_exchange_matrix,
    sign_eps,
    subplus,
)
from src.utils.errors import DomainError, InconsistentExchangeError
from src.utils.settings import DEFAULT_SEED_CAP

RootMonomial = Tuple[Tuple[LatticeVector, int], ...]


def denominator_vector(v: LaurentExpression) -> LatticeVector:
    """The alpha with v = P(x)/x^alpha where P has a nonzero constant term."""
    if v.is_zero() or not v.has_constant_term():
        raise DomainError(f"{v} has no denominator normal form: its numerator lacks a constant term")
    return tuple(-s for s in v.shift)


def check_positivity(v: LaurentExpression) -> bool:
    """Every integer coefficient of the numerator is nonnegative."""
    return all(c >= 0 for _, c in v.terms)


def label_variables(run: EngineRun, rs: RootSystem) -> Dict[LatticeVector, LaurentExpression]:
    """Root -> cluster variable through denominator vectors; must be onto the almost positive roots."""
    if not run.closed:
        raise DomainError("labeling needs a closed exchange graph")
    labels: Dict[LatticeVector, LaurentExpression] = {}
    for v in run.variables.values():
        alpha = denominator_vector(v)
        if alpha in labels:
            raise DomainError(f"two cluster variables share the denominator {format_root(alpha)}")
        if not rs.is_almost_positive(alpha):
            raise DomainError(f"denominator {format_root(alpha)} of {v} is not an almost positive root")
        labels[alpha] = v
    missing = [r for r in rs.almost_positive_roots if r not in labels]
    if missing:
        raise DomainError(f"no cluster variable for {', '.join(format_root(r) for r in missing)}")
    return labels


def _root_of(labels: Dict[LatticeVector, LaurentExpression]) -> Dict[VariableKey, LatticeVector]:
    return {v.key: root for root, v in labels.items()}


@dataclass(frozen=True)
class ExchangeData:
    """Right-hand side of one exchange relation: p+ M+ + p- M-, monomials over roots."""
    plus_monomial: RootMonomial
    minus_monomial: RootMonomial
    plus_coeff: TropElement
    minus_coeff: TropElement


def _monomial(exponents: Dict[LatticeVector, int]) -> RootMonomial:
    return tuple(sorted((r, e) for r, e in exponents.items() if e))


def _orientation(run: EngineRun, rs: RootSystem, root_of: Dict[VariableKey, LatticeVector]) -> int:
    """1 if the run starts at B(-Pi), -1 if it starts at -B(-Pi)."""
    seed = run.initial
    index = [rs.negative_simple_index(root_of[v.key]) for v in seed.cluster]
    if any(i is None for i in index):
        raise DomainError("the run does not start at the negative simple roots")
    reference = initial_exchange_matrix(rs)
    signs = set()
    for x in range(seed.n):
        for z in range(seed.n):
            b, expected = seed.matrix[x, z], reference[index[x], index[z]]
            if expected == 0 and b == 0:
                continue
            signs.add(1 if b == expected else -1 if b == -expected else 0)
    if 0 in signs or len(signs) > 1:
        raise InconsistentExchangeError("the initial exchange matrix is neither B(-Pi) nor its negative")
    return signs.pop() if signs else 1


def exchange_pair_data(run: EngineRun, rs: RootSystem) -> Dict[Tuple[LatticeVector, LatticeVector], ExchangeData]:
    """
    (beta, beta') -> the exchange relation replacing beta by beta', collected
    from every seed where that exchange happens.

    Raises InconsistentExchangeError when two seeds disagree, or when the
    relation is not p^eps x[beta+beta'] + p^-eps x[beta (+) beta'] with
    eps = eps(beta, beta'), the sign flipped for a run started at -B(-Pi).
    """
    labels = label_variables(run, rs)
    root_of = _root_of(labels)
    orientation = _orientation(run, rs, root_of)
    data: Dict[Tuple[LatticeVector, LatticeVector], ExchangeData] = {}
    for i, j in run.graph.edges():
        for a, b in ((i, j), (j, i)):
            seed, other = run.seeds[a], run.seeds[b]
            other_keys = {v.key for v in other.cluster}
            z = next(p for p, v in enumerate(seed.cluster) if v.key not in other_keys)
            beta = root_of[seed.cluster[z].key]
            beta2 = root_of[next(v.key for v in other.cluster if v.key not in {u.key for u in seed.cluster})]
            plus, minus = exchange_exponents(seed, z)
            cluster_roots = [root_of[v.key] for v in seed.cluster]
            entry = ExchangeData(
                _monomial(dict(zip(cluster_roots, plus))),
                _monomial(dict(zip(cluster_roots, minus))),
                seed.coeffs[z].plus,
                seed.coeffs[z].minus,
            )
            pair = (beta, beta2)
            known = data.setdefault(pair, entry)
            if known != entry:
                raise InconsistentExchangeError(
                    f"exchange {format_root(beta)} -> {format_root(beta2)} differs between seeds")
    for (beta, beta2), entry in data.items():
        total = _monomial(cluster_monomial_exponents(rs, tuple(x + y for x, y in zip(beta, beta2))))
        other = _monomial(cluster_monomial_exponents(rs, subplus(rs, beta, beta2)))
        expected = (total, other) if sign_eps(rs, beta, beta2) * orientation > 0 else (other, total)
        if (entry.plus_monomial, entry.minus_monomial) != expected:
            raise InconsistentExchangeError(
                f"exchange {format_root(beta)} -> {format_root(beta2)} does not match its root form")
    return data


def reexpand_from(run: EngineRun, seed_index: int, seed_cap: int = DEFAULT_SEED_CAP) -> EngineRun:
    """Rerun the engine from another seed of the run, on fresh variables y1..yn."""
    seed = run.seeds[seed_index]
    return build_exchange_graph(initial_seed(seed.matrix, seed.ring.semifield, seed.coeffs, prefix="y"), seed_cap)


def check_laurent_property(run: EngineRun, picks: int = 3, random_state: int = 0) -> bool:
    """
    Re-expands every variable around `picks` random non-initial seeds; each
    rerun must close with the same number of seeds and variables. Inexact
    divisions surface as InexactDivisionError.
    """
    candidates = list(range(1, len(run.seeds)))
    if not candidates:
        return True
    rng = np.random.default_rng(random_state)
    chosen = rng.choice(candidates, size=min(picks, len(candidates)), replace=False)
    for index in sorted(int(c) for c in chosen):
        other = reexpand_from(run, index)
        if not other.closed or len(other.seeds) != len(run.seeds) or len(other.variables) != len(run.variables):
            return False
    return True


def seed_clusters(run: EngineRun, rs: RootSystem) -> List[frozenset]:
    root_of = _root_of(label_variables(run, rs))
    return [frozenset(root_of[v.key] for v in s.cluster) for s in run.seeds]


def matches_cluster_complex(run: EngineRun, rs: RootSystem) -> bool:
    """
    The labeled exchange graph is the dual graph of the cluster complex:
    seeds carry exactly the clusters and edges exactly the shared walls.
    """
    by_seed = seed_clusters(run, rs)
    G = complex_exchange_graph(rs)
    expected_nodes = {frozenset(c) for c in G.nodes}
    if len(set(by_seed)) != len(by_seed) or set(by_seed) != expected_nodes:
        return False
    engine_edges = {frozenset((by_seed[i], by_seed[j])) for i, j in run.graph.edges()}
    complex_edges = {frozenset((frozenset(a), frozenset(b))) for a, b in G.edges()}
    return engine_edges == complex_edges
