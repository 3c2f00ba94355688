from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Set, Tuple

import numpy as np
import sympy as sp

from src.engine import build_exchange_graph, trivial_seed
from src.models.polygon import TILDE, PolygonModel, ThetaOrbit, polygon_model
from src.models.triangulation import ModelRelation, Term, _flip_graph, model_exchange_relation
from src.rootsys import initial_exchange_matrix, root_system_of_type
from src.utils.errors import DomainError


@dataclass
class GeometricReport:
    family: str
    n: int
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    witness: Optional[Dict[str, int]] = None

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures


class _Coordinates:
    """
    Polynomial values of the orbits of a polygon model: Pluecker coordinates
    of a 2 x N matrix of indeterminates (type A and B), quadratic forms in
    its columns (type C), or the type D coordinates with a scaled last column.
    """

    def __init__(self, model: PolygonModel):
        self.model = model
        family, n = model.family, model.n
        width = {"A": model.m, "B": n + 2, "C": n + 1, "D": n + 1}[family]
        self.z1 = sp.symbols(f"z1_1:{width + 1}")
        self.z2 = sp.symbols(f"z2_1:{width + 1}")
        self.t = sp.Symbol("t")
        self.width = width

    @property
    def symbols(self) -> List[sp.Symbol]:
        return list(self.z1) + list(self.z2) + ([self.t] if self.model.family == "D" else [])

    def plucker(self, a: int, b: int) -> sp.Expr:
        a, b = min(a, b), max(a, b)
        return self.z1[a - 1] * self.z2[b - 1] - self.z1[b - 1] * self.z2[a - 1]

    def _base(self, v: int) -> Tuple[int, bool]:
        half = self.model.m // 2
        return (v, False) if v <= half else (v - half, True)

    def value(self, orbit: ThetaOrbit) -> sp.Expr:
        family = self.model.family
        d = orbit.representative
        if family == "A":
            return self.plucker(d.a, d.b)
        (a, bar_a), (b, bar_b) = self._base(d.a), self._base(d.b)
        if family == "B":
            last = self.width
            if orbit.diameter:
                return self.plucker(a, last)
            if bar_a == bar_b:
                return self.plucker(a, b)
            return self.plucker(a, last) * self.plucker(b, last) - self.plucker(a, b)
        if family == "C":
            if orbit.diameter:
                return self.z1[a - 1] ** 2 + self.z2[a - 1] ** 2
            if bar_a == bar_b:
                return self.plucker(a, b)
            return self.z1[a - 1] * self.z1[b - 1] + self.z2[a - 1] * self.z2[b - 1]
        last = self.width
        if orbit.diameter:
            u = self.plucker(a, last)
            return self.t * u if orbit.color == TILDE else u
        if bar_a == bar_b:
            return self.plucker(a, b)
        return self.t * self.plucker(a, last) * self.plucker(b, last) - self.plucker(a, b)

    def term(self, term: Term) -> sp.Expr:
        out = sp.Integer(1)
        for orbit, e in term:
            out *= self.value(orbit) ** e
        return out

    def defect(self, relation: ModelRelation) -> sp.Expr:
        lhs = self.value(relation.flipped) * self.value(relation.partner)
        return sp.expand(lhs - self.term(relation.plus) - self.term(relation.minus))


def exchange_instances(model: PolygonModel) -> List[Tuple[ThetaOrbit, ThetaOrbit]]:
    """Every ordered pair (gone, came) exchanged by some flip."""
    pairs: Set[Tuple[ThetaOrbit, ThetaOrbit]] = set()
    for _, _, data in _flip_graph(model).edges(data=True):
        gone, came = data["exchanged"]
        pairs.add((gone, came))
        pairs.add((came, gone))
    return sorted(pairs)


def _witness(coords: _Coordinates, defect: sp.Expr, random_state: int) -> Dict[str, int]:
    rng = np.random.default_rng(random_state)
    for _ in range(20):
        point = {s: int(v) for s, v in zip(coords.symbols, rng.integers(-5, 6, size=len(coords.symbols)))}
        if defect.subs(point) != 0:
            return {str(s): v for s, v in point.items()}
    return {}


def verify_geometric_identities(family: str, n: int, random_state: int = 0) -> GeometricReport:
    """
    Substitutes the polygon coordinates into every exchange relation of the
    model, coefficients included; each must hold as a polynomial identity.
    The first failure gets an integer point where the two sides differ.
    """
    model = polygon_model(family, n)
    coords = _Coordinates(model)
    report = GeometricReport(family, n)
    for z, w in exchange_instances(model):
        relation = model_exchange_relation(family, n, z, w)
        defect = coords.defect(relation)
        report.checked += 1
        if defect != 0:
            report.failures.append(relation.describe())
            if report.witness is None:
                report.witness = _witness(coords, defect, random_state)
    return report


def _expansion(expr) -> Dict[Tuple[int, ...], int]:
    return {tuple(e + s for e, s in zip(m, expr.shift)): c for m, c in expr.terms}


def compatible_monomial_independence(n: int, max_degree: int = 3) -> bool:
    """
    Type A_n without coefficients: the cluster monomials of total degree at
    most max_degree are linearly independent as Laurent polynomials.
    """
    if n < 1 or max_degree < 0:
        raise DomainError("need a positive rank and a nonnegative degree")
    rs = root_system_of_type(f"A{n}")
    run = build_exchange_graph(trivial_seed(initial_exchange_matrix(rs)))
    monomials = {}
    one = run.ring.constant(1)
    for seed in run.seeds:
        ordered = sorted(seed.cluster, key=lambda v: v.key)
        for degree in range(max_degree + 1):
            for choice in combinations_with_replacement(range(len(ordered)), degree):
                key = tuple(ordered[i].key for i in choice)
                if key in monomials:
                    continue
                value = one
                for i in choice:
                    value = value * ordered[i]
                monomials[key] = _expansion(value)
    support = sorted({m for expansion in monomials.values() for m in expansion})
    position = {m: j for j, m in enumerate(support)}
    table = np.zeros((len(monomials), len(support)))
    for i, expansion in enumerate(monomials.values()):
        for m, c in expansion.items():
            table[i, position[m]] = c
    return int(np.linalg.matrix_rank(table)) == len(monomials)
