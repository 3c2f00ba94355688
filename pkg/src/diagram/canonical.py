from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.diagram.diagram import Diagram, component_vertex_sets


@dataclass(frozen=True, order=True)
class CanonicalDiagram:
    """
    Canonical encoding of a diagram up to vertex relabeling.

    `code` is the row-major directed weight matrix (w for i -> j, else 0) of
    the diagram in its canonical vertex order. Two diagrams are isomorphic as
    weighted digraphs iff their encodings are equal.
    """
    n: int
    code: Tuple[int, ...]

    def to_diagram(self) -> Diagram:
        n = self.n
        return Diagram(n, tuple(
            (i, j, self.code[i * n + j]) for i in range(n) for j in range(n) if self.code[i * n + j] > 0
        ))

    def to_bytes(self) -> bytes:
        return (f"{self.n}:" + ",".join(str(v) for v in self.code)).encode("ascii")

    def __str__(self) -> str:
        return self.to_bytes().decode("ascii")


def _encode(gamma: Diagram, order: Sequence[int]) -> Tuple[int, ...]:
    return tuple(max(gamma.signed_weight(i, j), 0) for i in order for j in order)


def _refine(gamma: Diagram, colors: List[int]) -> List[int]:
    """Colour refinement: split cells by the multiset of (neighbour colour, signed weight)."""
    n = gamma.n
    while True:
        signatures = []
        for v in range(n):
            around = sorted((colors[u], gamma.signed_weight(v, u)) for u in gamma.neighbors(v))
            signatures.append((colors[v], tuple(around)))
        ranking = {s: r for r, s in enumerate(sorted(set(signatures)))}
        refined = [ranking[s] for s in signatures]
        if len(ranking) == len(set(colors)):
            return refined
        colors = refined


def _search(gamma: Diagram, colors: List[int]) -> Tuple[Tuple[int, ...], List[int]]:
    colors = _refine(gamma, colors)
    n = gamma.n
    if len(set(colors)) == n:
        order = sorted(range(n), key=lambda v: colors[v])
        return _encode(gamma, order), order
    target = min(c for c in set(colors) if colors.count(c) > 1)
    best: Optional[Tuple[Tuple[int, ...], List[int]]] = None
    for v in range(n):
        if colors[v] != target:
            continue
        # individualize v: it keeps the lower half of its old cell
        split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        leaf = _search(gamma, split)
        if best is None or leaf[0] < best[0]:
            best = leaf
    return best


def canonical_order(gamma: Diagram) -> List[int]:
    """
    A vertex order that is the same for isomorphic diagrams (up to automorphisms).

    Connected diagrams use individualization-refinement and keep the leaf with
    the smallest encoding; components are ordered by their own canonical forms.
    """
    if gamma.n == 0:
        return []
    blocks = component_vertex_sets(gamma)
    if len(blocks) == 1:
        return _search(gamma, [0] * gamma.n)[1]
    keyed = []
    for block in blocks:
        sub = gamma.induced(block)
        local = _search(sub, [0] * sub.n)
        keyed.append(((sub.n, local[0]), [block[p] for p in local[1]]))
    keyed.sort(key=lambda item: item[0])
    return [v for _, order in keyed for v in order]


def canonical_form(gamma: Diagram) -> CanonicalDiagram:
    return CanonicalDiagram(gamma.n, _encode(gamma, canonical_order(gamma)))


def are_isomorphic(gamma1: Diagram, gamma2: Diagram) -> bool:
    return canonical_form(gamma1) == canonical_form(gamma2)
