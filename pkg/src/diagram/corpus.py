"""
Builders for the bundled diagram corpora: orientations of Dynkin diagrams,
extended Dynkin trees, unit-weight cycles, crowns and T-shaped trees.
"""
from __future__ import annotations

from itertools import product
from typing import Dict, List, Optional, Tuple

from src.diagram.canonical import canonical_form
from src.diagram.diagram import Diagram
from src.utils.errors import InputError

UndirectedEdge = Tuple[int, int, int]


def dynkin_edges(family: str, rank: int) -> List[UndirectedEdge]:
    """Edges (i, j, weight) of the Dynkin diagram, vertices 0-based in Bourbaki order."""
    family = family.upper()
    n = rank
    if family == "A" and n >= 1:
        return [(i, i + 1, 1) for i in range(n - 1)]
    if family in ("B", "C") and n >= 2:
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 2, n - 1, 2)]
    if family == "D" and n >= 4:
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
    if family == "E" and 6 <= n <= 8:
        return [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
    if family == "F" and n == 4:
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    if family == "G" and n == 2:
        return [(0, 1, 3)]
    raise InputError(f"no Dynkin diagram {family}{rank}")


def _oriented(n: int, edges: List[UndirectedEdge], flips: Tuple[bool, ...]) -> Diagram:
    return Diagram(n, tuple((j, i, w) if flip else (i, j, w) for (i, j, w), flip in zip(edges, flips)))


def dynkin_diagram(family: str, rank: int) -> Diagram:
    """The orientation with every edge pointing from the lower to the higher index."""
    edges = dynkin_edges(family, rank)
    return _oriented(rank, edges, (False,) * len(edges))


def all_tree_orientations(gamma: Diagram) -> List[Diagram]:
    """Every orientation of the underlying tree, one per isomorphism class, in canonical order."""
    edges = [(t, h, w) for t, h, w in gamma.edges]
    seen: Dict = {}
    for flips in product((False, True), repeat=len(edges)):
        oriented = _oriented(gamma.n, edges, flips)
        seen.setdefault(canonical_form(oriented), oriented)
    return [seen[form] for form in sorted(seen)]


def dynkin_corpus(max_rank: int = 8) -> List[Tuple[str, Diagram]]:
    """(type name, diagram) for every orientation class of every Dynkin diagram up to max_rank."""
    corpus = []
    for family, rank in _dynkin_types(max_rank):
        for oriented in all_tree_orientations(dynkin_diagram(family, rank)):
            corpus.append((f"{family}{rank}", oriented))
    return corpus


def _dynkin_types(max_rank: int) -> List[Tuple[str, int]]:
    types = [("A", n) for n in range(1, max_rank + 1)]
    types += [("B", n) for n in range(2, max_rank + 1)]
    types += [("D", n) for n in range(4, max_rank + 1)]
    types += [("E", n) for n in range(6, min(max_rank, 8) + 1)]
    if max_rank >= 4:
        types.append(("F", 4))
    if max_rank >= 2:
        types.append(("G", 2))
    return types


def _path(n: int, weights: List[int]) -> Diagram:
    return Diagram(n, tuple((i, i + 1, weights[i]) for i in range(n - 1)))


def t_diagram(p: int, q: int, r: int) -> Diagram:
    """
    T_{p,q,r}: chains A_p, A_q, A_r hung from one extra vertex.

    The center is vertex 0 and every edge points away from it.
    """
    edges = []
    nxt = 1
    for length in (p, q, r):
        previous = 0
        for _ in range(length):
            edges.append((previous, nxt, 1))
            previous = nxt
            nxt += 1
    return Diagram(nxt, tuple(edges))


def extended_dynkin_diagram(name: str, rank: int = 0, a: int = 1) -> Diagram:
    """
    Extended Dynkin trees: 'B', 'C', 'D' (with rank n), 'E6', 'E7', 'E8', 'F4'
    and 'G2' (a path with weights 3 and a, a in {1, 2, 3}).
    """
    name = name.upper()
    if name == "C" and rank >= 2:
        return _path(rank + 1, [2] + [1] * (rank - 2) + [2])
    if name == "B" and rank >= 3:
        edges = [(0, 2, 1), (1, 2, 1)] + [(i, i + 1, 1) for i in range(2, rank - 1)] + [(rank - 1, rank, 2)]
        return Diagram(rank + 1, tuple(edges))
    if name == "D" and rank >= 4:
        edges = [(0, 2, 1), (1, 2, 1)] + [(i, i + 1, 1) for i in range(2, rank - 2)]
        edges += [(rank - 2, rank - 1, 1), (rank - 2, rank, 1)]
        return Diagram(rank + 1, tuple(edges))
    if name == "E6":
        return t_diagram(2, 2, 2)
    if name == "E7":
        return t_diagram(1, 3, 3)
    if name == "E8":
        return t_diagram(1, 2, 5)
    if name == "F4":
        return _path(5, [1, 1, 2, 1])
    if name == "G2":
        if a not in (1, 2, 3):
            raise InputError(f"G2 extended tree takes a in (1, 2, 3), got {a}")
        return _path(3, [3, a])
    raise InputError(f"no extended Dynkin tree '{name}' of rank {rank}")


def extended_dynkin_corpus(max_vertices: int = 9) -> List[Tuple[str, Diagram]]:
    corpus = []
    for n in range(3, max_vertices):
        corpus.append((f"B{n}^(1)", extended_dynkin_diagram("B", n)))
    for n in range(2, max_vertices):
        corpus.append((f"C{n}^(1)", extended_dynkin_diagram("C", n)))
    for n in range(4, max_vertices):
        corpus.append((f"D{n}^(1)", extended_dynkin_diagram("D", n)))
    for name, size in (("E6", 7), ("E7", 8), ("E8", 9), ("F4", 5)):
        if size <= max_vertices:
            corpus.append((f"{name}^(1)", extended_dynkin_diagram(name)))
    for a in (1, 2, 3):
        corpus.append((f"G2^(1) a={a}", extended_dynkin_diagram("G2", a=a)))
    return corpus


def cycle_diagram(weights: List[int], forward: Optional[List[bool]] = None) -> Diagram:
    """m-cycle 0..m-1 with edge i between i and i+1; forward[i] orients it i -> i+1."""
    m = len(weights)
    if m < 3:
        raise InputError("a cycle needs at least 3 vertices")
    forward = forward if forward is not None else [True] * m
    edges = []
    for i, (w, f) in enumerate(zip(weights, forward)):
        j = (i + 1) % m
        edges.append((i, j, w) if f else (j, i, w))
    return Diagram(m, tuple(edges))


def non_cyclic_cycle_corpus(max_length: int = 6) -> List[Diagram]:
    """All non-cyclically oriented unit-weight cycles up to max_length, one per isomorphism class."""
    seen: Dict = {}
    for m in range(3, max_length + 1):
        for forward in product((True, False), repeat=m):
            if len(set(forward)) == 1:
                continue
            gamma = cycle_diagram([1] * m, list(forward))
            seen.setdefault(canonical_form(gamma), gamma)
    return [seen[form] for form in sorted(seen)]


def crown_diagram(p: int, q: int, r: int, s: int) -> Diagram:
    """
    S^s_{p,q,r}: branches A_{p-1}, A_{q-1}, A_{r-1} on three consecutive
    vertices u, v, w of a cyclically oriented (s+3)-cycle u -> v -> w -> ... -> u.

    Vertices 0..p+s+r-1 form the path left after deleting v and its branch:
    the far end of the w-branch first, then w, the s remaining cycle vertices,
    u and the u-branch, all edges pointing forward. v is vertex p+s+r and its
    branch follows.
    """
    if min(p, q, r) < 1 or s < 0:
        raise InputError(f"crown needs p, q, r >= 1 and s >= 0, got p={p} q={q} r={r} s={s}")
    length = p + s + r
    edges = [(i, i + 1, 1) for i in range(length - 1)]
    w = r - 1
    u = r + s
    v = length
    edges += [(u, v, 1), (v, w, 1)]
    previous = v
    for extra in range(length + 1, length + q):
        edges.append((previous, extra, 1))
        previous = extra
    return Diagram(length + q, tuple(edges))


def crown_witness_sequence(p: int, q: int, r: int, s: int) -> List[int]:
    """Mutation vertices, first applied first, turning the crown into T_{p+r-1,q,s}."""
    return list(range(s + r - 1, -1, -1))


def crown_instances(max_vertices: int = 9) -> List[Tuple[int, int, int, int]]:
    """All (p, q, r, s) with p+q+r+s <= max_vertices."""
    return [
        (p, q, r, s)
        for total in range(3, max_vertices + 1)
        for p in range(1, total + 1)
        for q in range(1, total + 1)
        for r in range(1, total + 1)
        for s in [total - p - q - r]
        if s >= 0
    ]
