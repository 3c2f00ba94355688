from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from sympy.ntheory.factor_ import core

from src.utils.errors import RealizabilityError


@dataclass(frozen=True, order=True)
class Surd:
    """
    An exact real number coeff * sqrt(radicand) with a squarefree radicand.

    Zero is stored as Surd(0, 1). Sums are only defined when both radicands
    agree (or one side is zero); anything else leaves the field Q(sqrt d) that
    a skew-symmetrizable matrix lives in, and raises RealizabilityError.
    """
    coeff: int
    radicand: int = 1

    def __post_init__(self):
        if self.radicand < 1:
            raise ValueError(f"radicand must be positive, got {self.radicand}")
        if self.coeff == 0 and self.radicand != 1:
            object.__setattr__(self, 'radicand', 1)

    @classmethod
    def from_signed_square(cls, sign: int, square: int) -> 'Surd':
        """Builds sign * sqrt(square) for a nonnegative integer square."""
        if square < 0:
            raise ValueError(f"cannot take the square root of {square}")
        if square == 0 or sign == 0:
            return cls(0, 1)
        free = int(core(square, 2))
        coeff = isqrt(square // free)
        return cls(coeff if sign > 0 else -coeff, free)

    @classmethod
    def integer(cls, value: int) -> 'Surd':
        return cls(int(value), 1)

    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def square(self) -> int:
        """The integer |self|^2; for a diagram entry this is the edge weight."""
        return self.coeff * self.coeff * self.radicand

    def is_integer(self) -> bool:
        return self.radicand == 1

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __neg__(self) -> 'Surd':
        return Surd(-self.coeff, self.radicand)

    def __abs__(self) -> 'Surd':
        return Surd(abs(self.coeff), self.radicand)

    def __add__(self, other: 'Surd') -> 'Surd':
        if not other:
            return self
        if not self:
            return other
        if self.radicand != other.radicand:
            raise RealizabilityError(
                f"sum {self} + {other} is not of the form sign*sqrt(integer)")
        return Surd(self.coeff + other.coeff, self.radicand)

    def __sub__(self, other: 'Surd') -> 'Surd':
        return self + (-other)

    def __mul__(self, other: 'Surd') -> 'Surd':
        if not self or not other:
            return Surd(0, 1)
        g = gcd(self.radicand, other.radicand)
        radicand = (self.radicand // g) * (other.radicand // g)
        return Surd(self.coeff * other.coeff * g, radicand)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"√{self.radicand}"
        if self.coeff == -1:
            return f"-√{self.radicand}"
        return f"{self.coeff}√{self.radicand}"
