from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from src.utils.errors import DomainError, InputError

TropElement = Tuple[int, ...]


@dataclass(frozen=True)
class TropSemifield:
    """
    Trop(p_1, ..., p_m): Laurent monomials in the generators, stored as
    exponent vectors. Multiplication adds exponents, the auxiliary addition
    takes the componentwise minimum.
    """
    generators: Tuple[str, ...] = ()

    def __post_init__(self):
        gens = tuple(str(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise InputError(f"semifield generators must be distinct: {list(gens)}")
        object.__setattr__(self, 'generators', gens)

    @property
    def m(self) -> int:
        return len(self.generators)

    def one(self) -> TropElement:
        return (0,) * self.m

    def generator(self, name: str, power: int = 1) -> TropElement:
        try:
            j = self.generators.index(name)
        except ValueError:
            raise InputError(f"unknown semifield generator '{name}'")
        return tuple(power if i == j else 0 for i in range(self.m))

    def element(self, exponents: Sequence[int]) -> TropElement:
        if len(exponents) != self.m:
            raise InputError(f"expected {self.m} exponents, got {len(exponents)}")
        return tuple(int(e) for e in exponents)

    def format(self, a: TropElement) -> str:
        parts = []
        for name, e in zip(self.generators, a):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def trop_mul(a: TropElement, b: TropElement) -> TropElement:
    return tuple(x + y for x, y in zip(a, b))


def trop_div(a: TropElement, b: TropElement) -> TropElement:
    return tuple(x - y for x, y in zip(a, b))


def trop_pow(a: TropElement, k: int) -> TropElement:
    return tuple(x * k for x in a)


def trop_add(a: TropElement, b: TropElement) -> TropElement:
    """The tropical sum: prod p_j^min(a_j, b_j)."""
    return tuple(min(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class CoefficientPair:
    """(p+, p-) with p+ ⊕ p- = 1."""
    plus: TropElement
    minus: TropElement

    def __post_init__(self):
        plus, minus = tuple(self.plus), tuple(self.minus)
        if len(plus) != len(minus):
            raise InputError("coefficient pair halves have different lengths")
        if any(v != 0 for v in trop_add(plus, minus)):
            raise DomainError(f"coefficient pair {plus}, {minus} is not normalized")
        object.__setattr__(self, 'plus', plus)
        object.__setattr__(self, 'minus', minus)

    @classmethod
    def trivial(cls, m: int = 0) -> 'CoefficientPair':
        return cls((0,) * m, (0,) * m)

    def ratio(self) -> TropElement:
        return trop_div(self.plus, self.minus)

    def swapped(self) -> 'CoefficientPair':
        return CoefficientPair(self.minus, self.plus)

    def to_list(self) -> list:
        return [list(self.plus), list(self.minus)]


def normalize_ratio(u: TropElement) -> CoefficientPair:
    """The unique normalized pair with ratio u: p = u/(1 ⊕ u), q = 1/(1 ⊕ u)."""
    one = (0,) * len(u)
    denominator = trop_add(one, u)
    return CoefficientPair(trop_div(u, denominator), trop_div(one, denominator))
