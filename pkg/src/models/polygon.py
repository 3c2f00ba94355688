from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

from src.rootsys import LatticeVector, RootSystem, format_root, root_system_of_type
from src.utils.errors import DomainError, InputError

PLAIN, TILDE = "plain", "tilde"

# smallest rank each family is modeled for (C2 is B2 with the roles swapped)
MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

_MODEL_TYPE = re.compile(r"^([ABCD])(\d+)$")


@dataclass(frozen=True, order=True)
class Diagonal:
    """Chord [a, b] of a regular m-gon with vertices 1..m counter-clockwise, stored with a < b."""
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise InputError(f"degenerate chord [{self.a},{self.b}]")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, 'a', a)
            object.__setattr__(self, 'b', b)

    def shares_vertex(self, other: 'Diagonal') -> bool:
        return bool({self.a, self.b} & {other.a, other.b})

    def crosses(self, other: 'Diagonal') -> bool:
        """Distinct chords with a common interior point."""
        if self == other or self.shares_vertex(other):
            return False
        return (self.a < other.a < self.b) != (self.a < other.b < self.b)

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True, order=True)
class ThetaOrbit:
    """
    An orbit of chords under the half-turn: a pair of centrally symmetric
    chords or a single diameter. In type A every orbit is a single chord.
    Type D diameters carry a color.
    """
    diagonals: Tuple[Diagonal, ...]
    diameter: bool = False
    color: str = PLAIN

    @property
    def representative(self) -> Diagonal:
        return self.diagonals[0]

    def to_dict(self) -> dict:
        out = {"diagonals": [[d.a, d.b] for d in self.diagonals]}
        if self.diameter:
            out["color"] = self.color
        return out

    def __str__(self) -> str:
        if len(self.diagonals) == 2:
            return "{" + ",".join(str(d) for d in self.diagonals) + "}"
        text = str(self.representative)
        return "~" + text if self.color == TILDE else text


class PolygonModel:
    """
    Orbits of chords of an m-gon standing for the almost positive roots of a
    classical type: A_n on the (n+3)-gon, B_n and C_n on the (2n+2)-gon and
    D_n on the 2n-gon with two colors of diameters.
    """

    def __init__(self, family: str, n: int):
        if family not in MIN_RANK:
            raise InputError(f"no polygon model for type {family}")
        if n < MIN_RANK[family]:
            raise InputError(f"the {family} polygon model needs rank at least {MIN_RANK[family]}, got {n}")
        self.family = family
        self.n = n
        self.m = {"A": n + 3, "B": 2 * n + 2, "C": 2 * n + 2, "D": 2 * n}[family]
        self.symmetric = family != "A"

    def __repr__(self) -> str:
        return f"PolygonModel({self.family}{self.n})"

    def theta(self, v: int) -> int:
        half = self.m // 2
        return v + half if v <= half else v - half

    def in_arc(self, v: int, start: int, end: int) -> bool:
        """v lies strictly inside the counter-clockwise arc from start to end."""
        return 0 < (v - start) % self.m < (end - start) % self.m

    def is_side_chord(self, a: int, b: int) -> bool:
        return (a - b) % self.m in (1, self.m - 1)

    def orbit(self, a: int, b: int, color: str = PLAIN) -> ThetaOrbit:
        d = Diagonal(a, b)
        if not self.symmetric:
            return ThetaOrbit((d,))
        image = Diagonal(self.theta(a), self.theta(b))
        if image == d:
            return ThetaOrbit((d,), True, color if self.family == "D" else PLAIN)
        return ThetaOrbit(tuple(sorted((d, image))))

    def is_side(self, orbit: ThetaOrbit) -> bool:
        d = orbit.representative
        return self.is_side_chord(d.a, d.b)

    @cached_property
    def orbits(self) -> Tuple[ThetaOrbit, ...]:
        """Every orbit of diagonals; type D lists each diameter once per color."""
        found = []
        seen = set()
        for a in range(1, self.m + 1):
            for b in range(a + 1, self.m + 1):
                if self.is_side_chord(a, b):
                    continue
                o = self.orbit(a, b)
                if o in seen:
                    continue
                seen.add(o)
                found.append(o)
                if o.diameter and self.family == "D":
                    found.append(self.orbit(a, b, TILDE))
        return tuple(sorted(found))

    @cached_property
    def sides(self) -> Tuple[ThetaOrbit, ...]:
        found = {self.orbit(a, a % self.m + 1) for a in range(1, self.m + 1)}
        return tuple(sorted(found))

    def side_name(self, side: ThetaOrbit) -> str:
        d = side.representative
        return f"p{d.a}_{d.b}"

    @cached_property
    def snake(self) -> Tuple[ThetaOrbit, ...]:
        """Position i holds the orbit of -alpha_{i+1}."""
        m = self.m
        out: List[ThetaOrbit] = []
        last = self.n - 1 if self.family == "D" else self.n
        for i in range(1, last + 1):
            k = (i + 1) // 2
            a, b = (k + 1, m - k + 1) if i % 2 else (k + 2, m - k + 1)
            out.append(self.orbit(a, b))
        if self.family == "D":
            d = out[-1].representative
            out.append(self.orbit(d.a, d.b, TILDE))
        if self.family in "BCD":
            diameter = out[self.n - 1] if self.family != "D" else out[self.n - 2]
            if not diameter.diameter:
                raise DomainError(f"snake of {self} lost its diameter")
        return tuple(out)

    def _crossings(self, d: Diagonal, orbit: ThetaOrbit) -> int:
        return sum(1 for e in orbit.diagonals if d.crosses(e))

    def degree(self, alpha: ThetaOrbit, beta: ThetaOrbit) -> int:
        """Compatibility degree (alpha || beta) read off the polygon."""
        if alpha == beta:
            return 0
        if self.family == "A":
            return int(alpha.representative.crosses(beta.representative))
        if self.family == "B":
            return self._crossings(alpha.representative, beta)
        if self.family == "C":
            return self._crossings(beta.representative, alpha)
        if alpha.diameter and beta.diameter:
            # same-colored diameters never cross; the center is a single orbit
            return int(alpha.color != beta.color and alpha.representative != beta.representative)
        points = sum(self._crossings(d, beta) for d in alpha.diagonals)
        return points // 2

    def compatible(self, alpha: ThetaOrbit, beta: ThetaOrbit) -> bool:
        return self.degree(alpha, beta) == 0 and self.degree(beta, alpha) == 0

    @cached_property
    def root_system(self) -> RootSystem:
        return root_system_of_type(f"{self.family}{self.n}")

    @cached_property
    def bijection(self) -> Dict[LatticeVector, ThetaOrbit]:
        """Almost positive root -> orbit; a positive root sum b_i alpha_i meets -alpha_i in degree b_i."""
        rs = self.root_system
        out: Dict[LatticeVector, ThetaOrbit] = {}
        for i, o in enumerate(self.snake):
            out[rs.negative_simple(i)] = o
        snake = set(self.snake)
        for o in self.orbits:
            if o in snake:
                continue
            root = tuple(self.degree(s, o) for s in self.snake)
            if root not in rs.positive_roots:
                raise DomainError(f"orbit {o} of {self} gives {list(root)}, not a positive root")
            if root in out:
                raise DomainError(f"orbits {out[root]} and {o} of {self} both give {format_root(root)}")
            out[root] = o
        if len(out) != len(rs.almost_positive_roots):
            raise DomainError(f"{self} has {len(out)} orbits for {len(rs.almost_positive_roots)} roots")
        return out

    @cached_property
    def root_of(self) -> Dict[ThetaOrbit, LatticeVector]:
        return {o: r for r, o in self.bijection.items()}


def parse_model_type(text: str) -> Tuple[str, int]:
    """'B3' -> ('B', 3)."""
    match = _MODEL_TYPE.match(text.strip())
    if not match:
        raise InputError(f"cannot parse model type '{text}', expected a classical type such as A3 or D4")
    return match.group(1), int(match.group(2))


@lru_cache(maxsize=None)
def polygon_model(family: str, n: int) -> PolygonModel:
    return PolygonModel(family, n)


def model_orbits(family: str, n: int) -> Tuple[ThetaOrbit, ...]:
    return polygon_model(family, n).orbits


def snake(family: str, n: int) -> Dict[LatticeVector, ThetaOrbit]:
    """-alpha_i -> its orbit on the snake."""
    model = polygon_model(family, n)
    rs = model.root_system
    return {rs.negative_simple(i): o for i, o in enumerate(model.snake)}


def root_diagonal_bijection(family: str, n: int) -> Dict[LatticeVector, ThetaOrbit]:
    return dict(polygon_model(family, n).bijection)


def model_compatibility_degree(family: str, n: int, alpha: ThetaOrbit, beta: ThetaOrbit) -> int:
    return polygon_model(family, n).degree(alpha, beta)


def orbit_from_dict(model: PolygonModel, data: dict) -> ThetaOrbit:
    """Inverse of ThetaOrbit.to_dict, also accepting a bare [a, b] pair."""
    if isinstance(data, list):
        a, b = data
        return model.orbit(int(a), int(b))
    try:
        a, b = data["diagonals"][0]
    except (KeyError, IndexError, TypeError, ValueError):
        raise InputError(f"cannot read an orbit from {data}")
    return model.orbit(int(a), int(b), data.get("color", PLAIN))
