from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.diagram.canonical import CanonicalDiagram, canonical_form
from src.diagram.cartan_type import CartanKillingType
from src.diagram.diagram import Diagram, component_vertex_sets, diagram_of
from src.diagram.mutation_class import MutationClassResult, mutation_class
from src.matrix_core import ExchangeMatrix, skew_symmetrizer
from src.utils.errors import NotSkewSymmetrizableError, RealizabilityError
from src.utils.settings import CLASS_CACHE_LIMIT

Component = Tuple[str, int]

# canonical form of a connected diagram -> its type, or None when 2-infinite
_CLASS_CACHE: Dict[CanonicalDiagram, Optional[Component]] = {}


def clear_class_cache():
    """Forgets every remembered mutation class."""
    _CLASS_CACHE.clear()


def _arm_lengths(G: nx.Graph, center: int) -> List[int]:
    lengths = []
    for first in G.neighbors(center):
        length, previous, current = 1, center, first
        while True:
            ahead = [u for u in G.neighbors(current) if u != previous]
            if not ahead:
                break
            previous, current = current, ahead[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def dynkin_shape(gamma: Diagram) -> Optional[Component]:
    """
    The family and rank if the underlying weighted graph is a Dynkin diagram.

    Orientation is ignored. The B/C ambiguity is reported as B; telling the
    two apart needs a realizing matrix.
    """
    n = gamma.n
    if n == 1:
        return ("A", 1)
    G = gamma.underlying_graph()
    if not nx.is_tree(G):
        return None
    degrees = dict(G.degree())
    heavy = [(t, h, w) for t, h, w in gamma.edges if w > 1]
    if not heavy:
        branch = [v for v, d in degrees.items() if d > 2]
        if not branch:
            return ("A", n)
        if len(branch) > 1 or degrees[branch[0]] > 3:
            return None
        arms = _arm_lengths(G, branch[0])
        if arms[0] == 1 and arms[1] == 1:
            return ("D", n)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return ("E", n)
        return None
    if len(heavy) > 1 or max(degrees.values()) > 2:
        return None
    t, h, w = heavy[0]
    if w == 3:
        return ("G", 2) if n == 2 else None
    if w != 2:
        return None
    if n == 2 or degrees[t] == 1 or degrees[h] == 1:
        return ("B", n)
    if n == 4:
        return ("F", 4)
    return None


def _component_type(component: Diagram) -> Optional[Component]:
    # whole classes are cached; the cache resets once it would pass CLASS_CACHE_LIMIT
    if component.n == 1:
        return ("A", 1)
    form = canonical_form(component)
    if form in _CLASS_CACHE:
        return _CLASS_CACHE[form]
    try:
        result = mutation_class(component, weight_cap=3)
    except RealizabilityError:
        _CLASS_CACHE[form] = None
        return None
    if not result.closed:
        _CLASS_CACHE[form] = None
        return None
    found = _find_dynkin_member(result)
    if len(_CLASS_CACHE) + len(result.members) > CLASS_CACHE_LIMIT:
        _CLASS_CACHE.clear()
    for member in result.members:
        _CLASS_CACHE[member] = found
    return found


def _find_dynkin_member(result: MutationClassResult) -> Optional[Component]:
    for form in result.sorted_members():
        shape = dynkin_shape(result.members[form])
        if shape is not None:
            return shape
    return None


def recognize_type(gamma: Diagram) -> Optional[CartanKillingType]:
    """
    Cartan-Killing type of a 2-finite diagram, or None if it is 2-infinite.

    Each connected component is recognized by closing its mutation class
    under the weight cap 3 and locating an orientation of a Dynkin diagram in
    it. Rank-2 and higher B/C components come back as B.
    """
    parts = []
    for block in component_vertex_sets(gamma):
        found = _component_type(gamma.induced(block))
        if found is None:
            return None
        parts.append(found)
    return CartanKillingType.of(parts)


def recognize_matrix_type(B: ExchangeMatrix) -> Optional[CartanKillingType]:
    """
    Like recognize_type, with B_n and C_n told apart by the skew-symmetrizer.

    A B_n component has a single short simple root, so exactly one vertex
    carries the minimal entry of D; a C_n component has n-1 of them.
    """
    d = skew_symmetrizer(B)
    if d is None:
        raise NotSkewSymmetrizableError("type recognition needs a skew-symmetrizable matrix")
    gamma = diagram_of(B)
    parts = []
    for block in component_vertex_sets(gamma):
        found = _component_type(gamma.induced(block))
        if found is None:
            return None
        family, rank = found
        if family == "B" and rank >= 3:
            values = [d[v] for v in block]
            if values.count(min(values)) != 1:
                family = "C"
        parts.append((family, rank))
    return CartanKillingType.of(parts)


def _cycle_order(gamma: Diagram) -> Optional[List[int]]:
    G = gamma.underlying_graph()
    if gamma.n < 3 or not nx.is_connected(G) or any(d != 2 for _, d in G.degree()):
        return None
    order = [0]
    previous = None
    while len(order) < gamma.n:
        current = order[-1]
        ahead = [u for u in sorted(G.neighbors(current)) if u != previous]
        previous = current
        order.append(ahead[0])
    return order


def is_cyclically_oriented(gamma: Diagram, cycle: List[int]) -> bool:
    m = len(cycle)
    signs = {gamma.signed_weight(cycle[i], cycle[(i + 1) % m]) > 0 for i in range(m)}
    return len(signs) == 1


def classify_cycle(gamma: Diagram) -> Optional[CartanKillingType]:
    """
    Direct rule for diagrams whose underlying graph is one n-cycle.

    Only cyclically oriented cycles are 2-finite: unit weights give D_n (A3
    for the triangle), weights {2,2,1} on a triangle give B3, and a 4-cycle
    with weights 2,1,2,1 in cyclic order gives F4.
    """
    cycle = _cycle_order(gamma)
    if cycle is None:
        raise ValueError("classify_cycle expects a diagram whose underlying graph is a cycle")
    if not is_cyclically_oriented(gamma, cycle):
        return None
    m = len(cycle)
    weights = [gamma.weight(cycle[i], cycle[(i + 1) % m]) for i in range(m)]
    if all(w == 1 for w in weights):
        return CartanKillingType.of([("A", 3)] if m == 3 else [("D", m)])
    if m == 3 and sorted(weights) == [1, 2, 2]:
        return CartanKillingType.of([("B", 3)])
    if m == 4 and weights in ([2, 1, 2, 1], [1, 2, 1, 2]):
        return CartanKillingType.of([("F", 4)])
    return None


def check_triangle_law(result: MutationClassResult) -> bool:
    """Every triangle in every member is cyclically oriented with weights {1,1,1} or {2,2,1}."""
    for gamma in result.members.values():
        for a in range(gamma.n):
            for b in range(a + 1, gamma.n):
                for c in range(b + 1, gamma.n):
                    if not (gamma.weight(a, b) and gamma.weight(b, c) and gamma.weight(a, c)):
                        continue
                    if not is_cyclically_oriented(gamma, [a, b, c]):
                        return False
                    weights = sorted([gamma.weight(a, b), gamma.weight(b, c), gamma.weight(a, c)])
                    if weights not in ([1, 1, 1], [1, 2, 2]):
                        return False
    return True


def check_cycle_law(result: MutationClassResult) -> bool:
    """Every chordless cycle in every member is cyclically oriented."""
    for gamma in result.members.values():
        G = gamma.underlying_graph()
        for cycle in nx.chordless_cycles(G):
            if not is_cyclically_oriented(gamma, list(cycle)):
                return False
    return True

