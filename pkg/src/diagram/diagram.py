from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from src.matrix_core import ExchangeMatrix, Surd, SymmetrizedMatrix, is_sign_skew_symmetric
from src.utils.errors import InputError, NotSignSkewSymmetricError


Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class Diagram:
    """
    Weighted directed graph Gamma(B) on vertices 0..n-1.

    Edges are (tail, head, weight) triples, kept sorted. At most one edge joins
    a pair of vertices and an absent edge has weight 0.
    """
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple(sorted((int(t), int(h), int(w)) for t, h, w in self.edges))
        seen = set()
        for t, h, w in edges:
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise InputError(f"edge ({t},{h}) has a vertex outside 0..{self.n - 1}")
            if t == h:
                raise InputError(f"loop at vertex {t}")
            if w < 1:
                raise InputError(f"edge ({t},{h}) has weight {w}, expected a positive integer")
            pair = frozenset((t, h))
            if pair in seen:
                raise InputError(f"more than one edge between {t} and {h}")
            seen.add(pair)
        object.__setattr__(self, 'edges', edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> 'Diagram':
        """Edges as (tail, head) or (tail, head, weight); weight defaults to 1."""
        triples = []
        for e in edges:
            if len(e) == 2:
                triples.append((e[0], e[1], 1))
            else:
                triples.append((e[0], e[1], e[2]))
        return cls(n, tuple(triples))

    @cached_property
    def _signed(self) -> List[List[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for t, h, w in self.edges:
            m[t][h] = w
            m[h][t] = -w
        return m

    def signed_weight(self, i: int, j: int) -> int:
        """+w if i -> j, -w if j -> i, 0 if the vertices are not joined."""
        return self._signed[i][j]

    def weight(self, i: int, j: int) -> int:
        return abs(self._signed[i][j])

    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)

    def neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.n) if self._signed[v][u] != 0]

    def induced(self, vertices: Sequence[int]) -> 'Diagram':
        """Subdiagram on the given vertices, renumbered in the listed order."""
        position = {v: p for p, v in enumerate(vertices)}
        return Diagram(len(vertices), tuple(
            (position[t], position[h], w) for t, h, w in self.edges
            if t in position and h in position
        ))

    def relabel(self, order: Sequence[int]) -> 'Diagram':
        """Vertex p of the result is vertex order[p] of self."""
        return self.induced(order)

    def to_networkx(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(range(self.n))
        for t, h, w in self.edges:
            G.add_edge(t, h, w=w)
        return G

    def underlying_graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        for t, h, w in self.edges:
            G.add_edge(t, h, w=w)
        return G

    def to_dict(self) -> Dict:
        """JSON diagram format, vertices numbered from 1."""
        return {"n": self.n, "edges": [{"tail": t + 1, "head": h + 1, "w": w} for t, h, w in self.edges]}

    def __str__(self) -> str:
        body = ", ".join(f"{t + 1}->{h + 1}" + (f"[{w}]" if w != 1 else "") for t, h, w in self.edges)
        return f"Diagram(n={self.n}: {body})"


def diagram_of(B: ExchangeMatrix) -> Diagram:
    """Edge i -> j of weight |b_ij b_ji| whenever b_ij > 0."""
    if not is_sign_skew_symmetric(B):
        raise NotSignSkewSymmetricError("the diagram of a matrix needs a sign-skew-symmetric matrix")
    return Diagram(B.n, tuple(
        (i, j, abs(B[i, j] * B[j, i]))
        for i in range(B.n) for j in range(B.n) if B[i, j] > 0
    ))


def diagram_to_matrix(gamma: Diagram) -> SymmetrizedMatrix:
    """Lift to the skew-symmetric surd matrix with s_ij = +sqrt(w) for i -> j."""
    n = gamma.n
    return SymmetrizedMatrix(tuple(
        tuple(Surd.from_signed_square(gamma.signed_weight(i, j), gamma.weight(i, j)) for j in range(n))
        for i in range(n)
    ))


def diagram_from_matrix(S: SymmetrizedMatrix) -> Diagram:
    return Diagram(S.n, tuple(
        (i, j, S[i, j].square())
        for i in range(S.n) for j in range(S.n) if S[i, j].sign() > 0
    ))


def diagram_mutate(gamma: Diagram, k: int) -> Diagram:
    """
    Mutation of a diagram at vertex k.

    The diagram is lifted to its surd matrix, mutated there and projected back,
    so the sign rule for the third edge of every 2-path through k comes out of
    the matrix rule. Raises RealizabilityError when sqrt(c) and sqrt(ab) cannot
    be added inside one quadratic field.
    """
    if not 0 <= k < gamma.n:
        raise IndexError(f"mutation vertex k={k} out of bounds for {gamma.n} vertices")
    return diagram_from_matrix(diagram_to_matrix(gamma).mutate(k))


def diagram_mutate_sequence(gamma: Diagram, ks: Sequence[int]) -> Diagram:
    for k in ks:
        gamma = diagram_mutate(gamma, k)
    return gamma


def component_vertex_sets(gamma: Diagram) -> List[List[int]]:
    return sorted(sorted(c) for c in nx.connected_components(gamma.underlying_graph()))


def connected_components(gamma: Diagram) -> List[Diagram]:
    return [gamma.induced(c) for c in component_vertex_sets(gamma)]


def is_connected(gamma: Diagram) -> bool:
    return gamma.n <= 1 or len(component_vertex_sets(gamma)) == 1
