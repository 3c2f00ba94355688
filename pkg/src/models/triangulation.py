from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx

from src.engine import (
    CoefficientPair,
    Seed,
    TropSemifield,
    build_exchange_graph,
    denominator_vector,
    exchange_exponents,
    initial_seed,
)
from src.matrix_core import ExchangeMatrix
from src.models.polygon import PLAIN, TILDE, PolygonModel, ThetaOrbit, polygon_model
from src.rootsys import complex_exchange_graph
from src.utils.errors import DomainError

Triangulation = FrozenSet[ThetaOrbit]
Term = Tuple[Tuple[ThetaOrbit, int], ...]


@lru_cache(maxsize=None)
def _compatibility_graph(model: PolygonModel) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(model.orbits)
    for i, a in enumerate(model.orbits):
        for b in model.orbits[i + 1:]:
            if model.compatible(a, b):
                G.add_edge(a, b)
    return G


@lru_cache(maxsize=None)
def _clusters(model: PolygonModel) -> Tuple[Triangulation, ...]:
    found = [frozenset(c) for c in nx.find_cliques(_compatibility_graph(model))]
    for c in found:
        if len(c) != model.n:
            raise DomainError(f"maximal noncrossing set of size {len(c)} in {model}")
    return tuple(sorted(found, key=lambda c: sorted(c)))


def model_clusters(family: str, n: int) -> Tuple[Triangulation, ...]:
    """Triangulations (centrally symmetric ones, with the color rule in type D) as orbit sets."""
    return _clusters(polygon_model(family, n))


def flip_partner(model: PolygonModel, T: Triangulation, z: ThetaOrbit) -> ThetaOrbit:
    if z not in T:
        raise DomainError(f"{z} is not in the triangulation")
    G = _compatibility_graph(model)
    rest = [t for t in T if t != z]
    candidates = set(model.orbits) - set(T)
    for t in rest:
        candidates &= set(G[t])
    if len(candidates) != 1:
        raise DomainError(f"{len(candidates)} ways to flip {z} in {model}")
    return candidates.pop()


def flip(T: Triangulation, z: ThetaOrbit, model: PolygonModel) -> Triangulation:
    """Replace z by the unique other orbit completing T - {z}."""
    partner = flip_partner(model, T, z)
    return frozenset([t for t in T if t != z] + [partner])


@lru_cache(maxsize=None)
def _flip_graph(model: PolygonModel) -> nx.Graph:
    G = nx.Graph()
    triangulations = _clusters(model)
    G.add_nodes_from(triangulations)
    for T in triangulations:
        for z in sorted(T):
            partner = flip_partner(model, T, z)
            image = frozenset([t for t in T if t != z] + [partner])
            if not G.has_edge(T, image):
                G.add_edge(T, image, exchanged=(z, partner))
    return G


def flip_graph(family: str, n: int) -> nx.Graph:
    """Triangulations joined by flips; edge attribute exchanged = (gone, came)."""
    return _flip_graph(polygon_model(family, n))


@dataclass(frozen=True)
class ModelRelation:
    """
    x_flipped * x_partner = p+ * M+ + p- * M-, with `plus`/`minus` listing
    every orbit of a term, sides included, with its exponent.
    """
    flipped: ThetaOrbit
    partner: ThetaOrbit
    plus: Term
    minus: Term
    kind: str

    def swapped(self) -> 'ModelRelation':
        return ModelRelation(self.partner, self.flipped, self.minus, self.plus, self.kind)

    def variables(self, model: PolygonModel, sign: int) -> Dict[ThetaOrbit, int]:
        term = self.plus if sign > 0 else self.minus
        return {o: e for o, e in term if not model.is_side(o)}

    def side_exponents(self, model: PolygonModel, sign: int) -> Dict[ThetaOrbit, int]:
        term = self.plus if sign > 0 else self.minus
        return {o: e for o, e in term if model.is_side(o)}

    def describe(self) -> str:
        def show(term: Term) -> str:
            if not term:
                return "1"
            return "*".join(f"x{o}" + (f"^{e}" if e != 1 else "") for o, e in term)
        return f"x{self.flipped} * x{self.partner} = p+ {show(self.plus)} + p- {show(self.minus)}"


def _weight(model: PolygonModel, orbit: ThetaOrbit) -> int:
    return 2 if model.family == "B" and orbit.diameter else 1


def _chord_factors(model: PolygonModel, a: int, b: int, color: str = PLAIN) -> List[ThetaOrbit]:
    """The orbits a chord of a relation term stands for: both colors for a type D diameter side."""
    o = model.orbit(a, b, color)
    if model.family == "D" and o.diameter and color == PLAIN and not model.is_side(o):
        return [o, model.orbit(a, b, TILDE)]
    return [o]


def _term(model: PolygonModel, flipped: ThetaOrbit, chords: Sequence[Tuple[int, int]]) -> Term:
    exponents: Dict[ThetaOrbit, Fraction] = {}
    for a, b in chords:
        for o in _chord_factors(model, a, b):
            exponents[o] = exponents.get(o, Fraction(0)) + Fraction(_weight(model, o), _weight(model, flipped))
    out = []
    for o, e in sorted(exponents.items()):
        if e.denominator != 1:
            raise DomainError(f"fractional exponent {e} for {o} in the relation of {flipped}")
        out.append((o, int(e)))
    return tuple(out)


def _quadrilateral_relation(model: PolygonModel, z: ThetaOrbit, w: ThetaOrbit) -> ModelRelation:
    """Flip inside the quadrilateral spanned by the crossing representatives of z and w."""
    for p in z.diagonals:
        for q in w.diagonals:
            if p.crosses(q):
                s, t = p.a, p.b
                r, u = (q.a, q.b) if model.in_arc(q.a, s, t) else (q.b, q.a)
                plus = _term(model, z, [(s, r), (t, u)])
                minus = _term(model, z, [(s, u), (r, t)])
                kind = "diameters" if z.diameter and w.diameter else "quadrilateral"
                if model.family == "D" and any(model.theta(x) == y for x, y in [(s, r), (t, u), (s, u), (r, t)]):
                    kind = "diameter side"
                elif model.family in "BC" and any(o.diameter for o, _ in plus + minus):
                    kind = "diameter side"
                return ModelRelation(z, w, plus, minus, kind)
    raise DomainError(f"{z} and {w} do not cross")


def _diameter_pair(model: PolygonModel, z: ThetaOrbit, w: ThetaOrbit) -> ModelRelation:
    """Type D: diameters of different colors at different locations."""
    a = z.representative.a
    abar = model.theta(a)
    d = w.representative
    b = d.a if model.in_arc(d.a, a, abar) else d.b
    plus = _merge(_chord_factors(model, a, b))
    minus = _merge(_chord_factors(model, a, model.theta(b)))
    return ModelRelation(z, w, plus, minus, "colored diameters")


def _diameter_with_pair(model: PolygonModel, z: ThetaOrbit, w: ThetaOrbit) -> ModelRelation:
    """Type D: diameter z at a against the pair w = {[b, c-bar]} with a, b, c, a-bar counter-clockwise."""
    a = z.representative.a
    abar = model.theta(a)
    for d in w.diagonals:
        for x, y in ((d.a, d.b), (d.b, d.a)):
            if model.in_arc(x, a, abar) and model.in_arc(y, abar, a):
                b, c = x, model.theta(y)
                if (b - a) % model.m < (c - a) % model.m:
                    plus = _merge(_chord_factors(model, a, b) + [model.orbit(c, model.theta(c), z.color)])
                    minus = _merge(_chord_factors(model, a, model.theta(c)) + [model.orbit(b, model.theta(b), z.color)])
                    return ModelRelation(z, w, plus, minus, "diameter and pair")
    raise DomainError(f"{w} does not straddle the diameter {z}")


def _merge(orbits: List[ThetaOrbit]) -> Term:
    counts: Dict[ThetaOrbit, int] = {}
    for o in orbits:
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def model_exchange_relation(family: str, n: int, z: ThetaOrbit, w: ThetaOrbit) -> ModelRelation:
    """The exchange relation replacing orbit z by orbit w."""
    model = polygon_model(family, n)
    if model.degree(z, w) != 1 or model.degree(w, z) != 1:
        raise DomainError(f"{z} and {w} are not exchangeable in {model}")
    if model.family == "D" and (z.diameter or w.diameter):
        if z.diameter and w.diameter:
            return _diameter_pair(model, z, w)
        if z.diameter:
            return _diameter_with_pair(model, z, w)
        return _diameter_with_pair(model, w, z).swapped()
    return _quadrilateral_relation(model, z, w)


def relation_in(model: PolygonModel, T: Triangulation, z: ThetaOrbit) -> ModelRelation:
    return model_exchange_relation(model.family, model.n, z, flip_partner(model, T, z))


def b_matrix_of_triangulation(T: Sequence[ThetaOrbit], model: PolygonModel) -> ExchangeMatrix:
    """
    Type A: b = 1 (resp. -1) for two sides [a,b], [a,c] of a triangle of T
    with a, b, c counter-clockwise (resp. clockwise), 0 otherwise.
    """
    if model.family != "A":
        raise DomainError("the triangle rule is stated for type A; use b_matrix_from_relations")
    chords = {o.representative for o in T}

    def present(u: int, v: int) -> bool:
        return model.is_side_chord(u, v) or model.orbit(u, v).representative in chords

    rows = []
    for alpha in T:
        row = []
        for beta in T:
            value = 0
            shared = {alpha.representative.a, alpha.representative.b} & {beta.representative.a, beta.representative.b}
            if alpha != beta and shared:
                apex = shared.pop()
                u = alpha.representative.b if alpha.representative.a == apex else alpha.representative.a
                w = beta.representative.b if beta.representative.a == apex else beta.representative.a
                if present(u, w):
                    value = 1 if model.in_arc(u, apex, w) else -1
            row.append(value)
        rows.append(row)
    return ExchangeMatrix.from_rows(rows, [str(o) for o in T])


def b_matrix_from_relations(T: Sequence[ThetaOrbit], model: PolygonModel) -> ExchangeMatrix:
    """b_xz = (exponent of x in M+) - (exponent of x in M-) for the flip of z."""
    T = list(T)
    columns = []
    for z in T:
        relation = relation_in(model, frozenset(T), z)
        plus, minus = relation.variables(model, 1), relation.variables(model, -1)
        columns.append([plus.get(x, 0) - minus.get(x, 0) if x != z else 0 for x in T])
    rows = [[columns[j][i] for j in range(len(T))] for i in range(len(T))]
    return ExchangeMatrix.from_rows(rows, [str(o) for o in T])


def side_semifield(model: PolygonModel) -> TropSemifield:
    return TropSemifield(tuple(model.side_name(s) for s in model.sides))


def special_coefficients(model: PolygonModel, relation: ModelRelation) -> CoefficientPair:
    """Each side orbit of a term becomes its generator, each diagonal becomes 1."""
    plus, minus = relation.side_exponents(model, 1), relation.side_exponents(model, -1)
    return CoefficientPair(tuple(plus.get(s, 0) for s in model.sides), tuple(minus.get(s, 0) for s in model.sides))


def special_seed(family: str, n: int) -> Seed:
    """Seed at the snake triangulation with the special coefficient system."""
    model = polygon_model(family, n)
    T = list(model.snake)
    coeffs = [special_coefficients(model, relation_in(model, frozenset(T), z)) for z in T]
    return initial_seed(b_matrix_from_relations(T, model), side_semifield(model), coeffs)


@dataclass
class EngineComparison:
    seeds: int = 0
    relations: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.seeds > 0 and not self.mismatches


def compare_with_engine(family: str, n: int) -> EngineComparison:
    """
    Runs the engine from the special seed and checks, at every seed and
    position, that the engine's exchange relation is the polygon one,
    coefficients included.
    """
    model = polygon_model(family, n)
    run = build_exchange_graph(special_seed(family, n))
    report = EngineComparison(seeds=len(run.seeds))
    orbit_of = {}
    for key, v in run.variables.items():
        root = denominator_vector(v)
        if root not in model.bijection:
            report.mismatches.append(f"variable {v} has denominator {list(root)} outside the root system")
            return report
        orbit_of[key] = model.bijection[root]
    triangulations = set(_clusters(model))
    for seed in run.seeds:
        orbits = [orbit_of[v.key] for v in seed.cluster]
        T = frozenset(orbits)
        if T not in triangulations:
            report.mismatches.append(f"seed {[str(o) for o in orbits]} is not a triangulation")
            continue
        for z, orbit in enumerate(orbits):
            relation = relation_in(model, T, orbit)
            plus, minus = exchange_exponents(seed, z)
            engine_plus = {orbits[i]: e for i, e in enumerate(plus) if e}
            engine_minus = {orbits[i]: e for i, e in enumerate(minus) if e}
            expected = special_coefficients(model, relation)
            report.relations += 1
            if (engine_plus, engine_minus) != (relation.variables(model, 1), relation.variables(model, -1)):
                report.mismatches.append(f"monomials differ for {relation.describe()}")
            elif seed.coeffs[z] != expected:
                report.mismatches.append(f"coefficients differ for {relation.describe()}")
    return report


def check_flip_coherence(family: str, n: int) -> bool:
    """The flip graph, relabeled by roots, is the exchange graph of the cluster complex."""
    model = polygon_model(family, n)
    rs = model.root_system
    G = _flip_graph(model)
    H = complex_exchange_graph(rs)
    to_roots = lambda T: frozenset(model.root_of[o] for o in T)
    nodes = {to_roots(T) for T in G.nodes}
    if nodes != {frozenset(c) for c in H.nodes}:
        return False
    edges = {frozenset((to_roots(a), to_roots(b))) for a, b in G.edges()}
    return edges == {frozenset((frozenset(a), frozenset(b))) for a, b in H.edges()}
