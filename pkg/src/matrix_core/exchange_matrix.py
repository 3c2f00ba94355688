from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.matrix_core.surd import Surd
from src.utils.errors import InputError, NotSkewSymmetrizableError


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class ExchangeMatrix:
    """
    A labeled square integer matrix with zero diagonal: the B of a seed.

    Entries are Python ints, so long mutation sequences on 2-infinite
    inputs never overflow.
    """
    labels: Tuple[str, ...]
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        labels = tuple(str(l) for l in self.labels)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise InputError(f"exchange matrix must be square, got row lengths {[len(r) for r in rows]}")
        if len(labels) != n:
            raise InputError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise InputError(f"labels must be distinct: {list(labels)}")
        for i in range(n):
            if rows[i][i] != 0:
                raise InputError(f"diagonal entry b[{labels[i]}][{labels[i]}] = {rows[i][i]} is not zero")
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, 'labels', labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> 'ExchangeMatrix':
        if labels is None:
            labels = [str(i + 1) for i in range(len(rows))]
        return cls(tuple(labels), tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InputError(f"unknown index label '{label}', expected one of {list(self.labels)}")

    def to_array(self) -> np.ndarray:
        """Entries as a numpy object array (arbitrary precision ints)."""
        return np.array([list(r) for r in self.rows], dtype=object).reshape(self.n, self.n)

    def relabel(self, order: Sequence[int]) -> 'ExchangeMatrix':
        """Simultaneous row/column permutation: position p takes old index order[p]."""
        rows = [[self.rows[i][j] for j in order] for i in order]
        return ExchangeMatrix.from_rows(rows, [self.labels[i] for i in order])

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class CartanMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise InputError("Cartan matrix must be square")
            if rows[i][i] != 2:
                raise InputError(f"Cartan matrix needs a[{i}][{i}] = 2, got {rows[i][i]}")
            for j in range(n):
                if i != j and rows[i][j] > 0:
                    raise InputError(f"Cartan matrix needs a[{i}][{j}] <= 0, got {rows[i][j]}")
        object.__setattr__(self, 'rows', rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)


@dataclass(frozen=True)
class SymmetrizedMatrix:
    """Skew-symmetric matrix of exact surds, the conjugate S(B) = H B H^-1."""
    entries: Tuple[Tuple[Surd, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i in range(n):
            for j in range(n):
                if self.entries[i][j] != -self.entries[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> Surd:
        i, j = ij
        return self.entries[i][j]

    def mutate(self, k: int) -> 'SymmetrizedMatrix':
        """The matrix mutation rule applied verbatim to surd entries."""
        n = self.n
        _check_index(k, n)
        s = self.entries
        out: List[List[Surd]] = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == k or j == k:
                    row.append(-s[i][j])
                    continue
                a, b = s[i][k], s[k][j]
                if a.sign() != 0 and a.sign() == b.sign():
                    delta = abs(a) * abs(b)
                    row.append(s[i][j] + (delta if a.sign() > 0 else -delta))
                else:
                    row.append(s[i][j])
            out.append(row)
        return SymmetrizedMatrix(tuple(tuple(r) for r in out))


def _check_index(k: int, n: int):
    if not 0 <= k < n:
        raise IndexError(f"mutation index k={k} out of bounds for size {n}")


def mutate(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """
    Matrix mutation in direction k (0-based position).

    b'_ij = -b_ij if i = k or j = k, otherwise
    b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
    The diagonal is kept at zero for every input.
    """
    _check_index(k, B.n)
    b = B.to_array()
    col = b[:, k]
    row = b[k, :]
    out = b + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    out[k, :] = -b[k, :]
    out[:, k] = -b[:, k]
    for i in range(B.n):
        out[i, i] = 0
    return ExchangeMatrix(B.labels, tuple(tuple(int(v) for v in r) for r in out))


def mutate_sequence(B: ExchangeMatrix, ks: Sequence[int]) -> ExchangeMatrix:
    """Applies mutations in the listed order (ks[0] first)."""
    for k in ks:
        B = mutate(B, k)
    return B


def cartan_counterpart(B: ExchangeMatrix) -> CartanMatrix:
    n = B.n
    return CartanMatrix(tuple(
        tuple(2 if i == j else -abs(B[i, j]) for j in range(n)) for i in range(n)
    ))


def is_sign_skew_symmetric(B: ExchangeMatrix) -> bool:
    n = B.n
    for i in range(n):
        for j in range(i + 1, n):
            bij, bji = B[i, j], B[j, i]
            if (bij == 0) != (bji == 0):
                return False
            if bij * bji > 0:
                return False
    return True


def _components(B: ExchangeMatrix) -> List[List[int]]:
    G = nx.Graph()
    G.add_nodes_from(range(B.n))
    G.add_edges_from((i, j) for i in range(B.n) for j in range(B.n) if i != j and B[i, j] != 0)
    return sorted(sorted(c) for c in nx.connected_components(G))


def skew_symmetrizer(B: ExchangeMatrix) -> Optional[Tuple[int, ...]]:
    """
    Smallest positive integer diagonal D with DB skew-symmetric, or None.

    Values are propagated along a BFS spanning tree of every connected block
    (d_j = d_i |b_ij| / |b_ji|), each block is scaled to coprime integers,
    and then every entry is checked, which covers the cycle condition.
    """
    if not is_sign_skew_symmetric(B):
        return None
    n = B.n
    d: List[Fraction] = [Fraction(0)] * n
    for block in _components(B):
        root = block[0]
        d[root] = Fraction(1)
        seen = {root}
        queue = [root]
        while queue:
            i = queue.pop(0)
            for j in range(n):
                if j not in seen and B[i, j] != 0:
                    d[j] = d[i] * abs(B[i, j]) / abs(B[j, i])
                    seen.add(j)
                    queue.append(j)
        denom = 1
        for i in block:
            denom = _lcm(denom, d[i].denominator)
        scaled = [int(d[i] * denom) for i in block]
        common = 0
        for v in scaled:
            common = gcd(common, v)
        for i, v in zip(block, scaled):
            d[i] = Fraction(v // common)
    for i in range(n):
        for j in range(n):
            if d[i] * B[i, j] != -d[j] * B[j, i]:
                return None
    return tuple(int(v) for v in d)


def is_skew_symmetrizable(B: ExchangeMatrix) -> bool:
    return skew_symmetrizer(B) is not None


def symmetrized(B: ExchangeMatrix) -> SymmetrizedMatrix:
    """S(B) with s_ij = sgn(b_ij) sqrt|b_ij b_ji|, kept as exact surds."""
    if skew_symmetrizer(B) is None:
        raise NotSkewSymmetrizableError("S(B) needs a skew-symmetrizable matrix")
    n = B.n
    return SymmetrizedMatrix(tuple(
        tuple(Surd.from_signed_square(_sign(B[i, j]), abs(B[i, j] * B[j, i])) for j in range(n))
        for i in range(n)
    ))


def _as_labeled_digraph(B: ExchangeMatrix) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(range(B.n))
    for i in range(B.n):
        for j in range(B.n):
            if B[i, j] != 0:
                G.add_edge(i, j, b=B[i, j])
    return G


def are_equal_up_to_relabeling(B1: ExchangeMatrix, B2: ExchangeMatrix) -> bool:
    if B1.n != B2.n:
        return False
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        _as_labeled_digraph(B1), _as_labeled_digraph(B2),
        edge_match=lambda e1, e2: e1['b'] == e2['b'])
    return matcher.is_isomorphic()
