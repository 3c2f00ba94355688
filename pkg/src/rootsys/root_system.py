from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.diagram.cartan_type import CartanKillingType
from src.matrix_core import CartanMatrix, ExchangeMatrix, skew_symmetrizer
from src.utils.errors import DomainError, InputError

LatticeVector = Tuple[int, ...]


def _block_cartan(family: str, rank: int) -> List[List[int]]:
    """
    Cartan matrix with a_ij = 2(a_i,a_j)/(a_i,a_i) in Bourbaki numbering:
    B_n has the short simple root last, C_n the long one, F4 has a_1, a_2
    long and G2 has a_1 short.
    """
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if family in ("A", "B", "C", "D"):
        last = n - 2 if family == "D" else n - 1
        for i in range(last):
            link(i, i + 1)
        if family == "B":
            link(n - 2, n - 1, -1, -2)
        elif family == "C":
            link(n - 2, n - 1, -2, -1)
        elif family == "D":
            link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        link(0, 1, -3, -1)
    return a


def cartan_matrix_of_type(cartan_type: CartanKillingType) -> CartanMatrix:
    """Block-diagonal Cartan matrix, components in the order of the type."""
    size = cartan_type.rank
    rows = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    offset = 0
    for family, rank in cartan_type.components:
        block = _block_cartan(family, rank)
        for i in range(rank):
            for j in range(rank):
                rows[offset + i][offset + j] = block[i][j]
        offset += rank
    return CartanMatrix(tuple(tuple(r) for r in rows))


def reflect(cartan: CartanMatrix, i: int, beta: Sequence[int]) -> LatticeVector:
    """s_i(beta) = beta - (sum_j a_ij [beta:a_j]) a_i."""
    out = list(beta)
    out[i] -= sum(cartan[i, j] * beta[j] for j in range(cartan.n))
    return tuple(out)


def _positive_roots(cartan: CartanMatrix, limit: int = 1000) -> List[LatticeVector]:
    n = cartan.n
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            if beta == simple[i]:
                continue
            image = reflect(cartan, i, beta)
            if image not in found:
                if min(image) < 0:
                    raise DomainError("Cartan matrix is not of finite type: a reflection left the positive cone")
                found.add(image)
                queue.append(image)
                if len(found) > limit:
                    raise DomainError(f"more than {limit} positive roots; the Cartan matrix is not of finite type")
    return sorted(found, key=lambda v: (sum(v), tuple(-c for c in v)))


def _components(cartan: CartanMatrix) -> List[List[int]]:
    G = nx.Graph()
    G.add_nodes_from(range(cartan.n))
    G.add_edges_from((i, j) for i in range(cartan.n) for j in range(cartan.n) if i != j and cartan[i, j] != 0)
    return sorted(sorted(c) for c in nx.connected_components(G))


def _bipartition(cartan: CartanMatrix, components: List[List[int]]) -> Tuple[int, ...]:
    signs = [0] * cartan.n
    for block in components:
        signs[block[0]] = 1
        for u, v in nx.bfs_edges(_coxeter_graph(cartan), block[0]):
            signs[v] = -signs[u]
    return tuple(signs)


def _coxeter_graph(cartan: CartanMatrix) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(cartan.n))
    G.add_edges_from((i, j) for i in range(cartan.n) for j in range(i + 1, cartan.n) if cartan[i, j] != 0)
    return G


def _invariant_form(cartan: CartanMatrix) -> Tuple[Tuple[int, ...], ...]:
    """(a_i, a_j) with short roots of squared length 2 in every component."""
    n = cartan.n
    signed = ExchangeMatrix.from_rows([
        [0 if i == j else (abs(cartan[i, j]) if i < j else -abs(cartan[i, j])) for j in range(n)]
        for i in range(n)
    ])
    d = skew_symmetrizer(signed)
    if d is None:
        raise DomainError("Cartan matrix is not symmetrizable")
    return tuple(tuple(d[i] * cartan[i, j] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    """
    Finite root system of a (possibly decomposable) Cartan matrix.

    Roots are integer coefficient vectors over the simple roots. Positive
    roots are sorted by height, then by coefficients. `signs[i]` is +1 on I+
    (the lowest index of every component sits in I+) and -1 on I-.
    """
    cartan: CartanMatrix
    positive_roots: Tuple[LatticeVector, ...]
    components: Tuple[Tuple[int, ...], ...]
    coxeter_numbers: Tuple[int, ...]
    signs: Tuple[int, ...]
    form: Tuple[Tuple[int, ...], ...]
    cartan_type: Optional[CartanKillingType] = None

    @classmethod
    def from_cartan(cls, cartan: CartanMatrix, cartan_type: Optional[CartanKillingType] = None) -> 'RootSystem':
        positive = _positive_roots(cartan)
        components = _components(cartan)
        coxeter = []
        for block in components:
            count = sum(1 for v in positive if any(v[i] for i in block))
            coxeter.append(2 * count // len(block))
        return cls(
            cartan=cartan,
            positive_roots=tuple(positive),
            components=tuple(tuple(b) for b in components),
            coxeter_numbers=tuple(coxeter),
            signs=_bipartition(cartan, components),
            form=_invariant_form(cartan),
            cartan_type=cartan_type,
        )

    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def h(self) -> int:
        """Coxeter number; only defined for an irreducible system."""
        if len(self.coxeter_numbers) != 1:
            raise DomainError("the Coxeter number needs an irreducible root system")
        return self.coxeter_numbers[0]

    @property
    def max_coxeter_number(self) -> int:
        return max(self.coxeter_numbers)

    def simple_root(self, i: int) -> LatticeVector:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def negative_simple(self, i: int) -> LatticeVector:
        return tuple(-1 if j == i else 0 for j in range(self.n))

    @cached_property
    def negative_simples(self) -> Tuple[LatticeVector, ...]:
        return tuple(self.negative_simple(i) for i in range(self.n))

    @cached_property
    def almost_positive_roots(self) -> Tuple[LatticeVector, ...]:
        """Phi_{>=-1}: the negative simple roots first, then the positive roots."""
        return self.negative_simples + self.positive_roots

    def __hash__(self) -> int:
        return self._hash_value

    @cached_property
    def _hash_value(self) -> int:
        return hash((self.cartan.rows, self.signs, self.cartan_type))

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.almost_positive_roots)

    def is_almost_positive(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def negative_simple_index(self, v: Sequence[int]) -> Optional[int]:
        v = tuple(v)
        if sum(1 for c in v if c != 0) == 1 and min(v) == -1:
            return v.index(-1)
        return None

    def component_of(self, v: Sequence[int]) -> int:
        """Index of the component holding the support of a root."""
        for index, block in enumerate(self.components):
            if any(v[i] for i in block):
                return index
        raise DomainError(f"{format_root(v)} has empty support")

    def coxeter_number_of(self, v: Sequence[int]) -> int:
        return self.coxeter_numbers[self.component_of(v)]

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        F = np.array(self.form, dtype=np.int64)
        return int(np.array(u, dtype=np.int64) @ F @ np.array(v, dtype=np.int64))

    def squared_length(self, v: Sequence[int]) -> int:
        return self.pairing(v, v)

    def symmetrizer(self) -> Tuple[int, ...]:
        """d_i = (a_i, a_i) / 2, the minimal positive integers per component."""
        return tuple(self.form[i][i] // 2 for i in range(self.n))

    def name(self) -> str:
        return str(self.cartan_type) if self.cartan_type is not None else "custom"


def build_root_system(cartan_type: CartanKillingType) -> RootSystem:
    return RootSystem.from_cartan(cartan_matrix_of_type(cartan_type), cartan_type)


def root_system_of_type(text: str) -> RootSystem:
    """build_root_system for a type string such as 'A3' or 'B2xA1'. 'C2' is read as B2."""
    return build_root_system(CartanKillingType.parse(text))


def format_root(v: Sequence[int]) -> str:
    """Coefficient vector as text, e.g. (2,1) -> '2α1+α2', (0,-1) -> '-α2'."""
    parts = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}α{i + 1}")
    return "".join(parts) if parts else "0"


def parse_root(text: str, n: int) -> LatticeVector:
    """Inverse of format_root; also accepts 'a' for 'α' and a bracketed list '[1,0,1]'."""
    text = text.strip().replace("a", "α").replace(" ", "")
    if text.startswith("["):
        try:
            values = tuple(int(x) for x in text.strip("[]").split(","))
        except ValueError:
            raise InputError(f"cannot parse root '{text}'")
        if len(values) != n:
            raise InputError(f"root '{text}' needs {n} coordinates")
        return values
    out = [0] * n
    if text == "0":
        return tuple(out)
    for piece in text.replace("-", "+-").split("+"):
        if not piece:
            continue
        sign = -1 if piece.startswith("-") else 1
        piece = piece.lstrip("-")
        coeff, _, index = piece.partition("α")
        try:
            i = int(index) - 1
            c = int(coeff) if coeff else 1
        except ValueError:
            raise InputError(f"cannot parse root '{text}'")
        if not 0 <= i < n:
            raise InputError(f"root '{text}' uses a simple root outside 1..{n}")
        out[i] += sign * c
    return tuple(out)


def exceptional_roots(rs: RootSystem) -> List[LatticeVector]:
    """
    Positive roots a with no index j such that [a:a_j] = 1 and a has the
    length of a_j.
    """
    out = []
    for alpha in rs.positive_roots:
        length = rs.squared_length(alpha)
        if not any(alpha[j] == 1 and rs.form[j][j] == length for j in range(rs.n)):
            out.append(alpha)
    return out
