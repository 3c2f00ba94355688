from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.engine.semifield import TropElement, TropSemifield
from src.utils.errors import InexactDivisionError, InputError

Monomial = Tuple[int, ...]


class LaurentRing:
    """
    Z[p_1..p_m][x_1^±1..x_n^±1] for one engine run, on a sympy sparse
    polynomial ring with the x generators first.
    """

    def __init__(self, n: int, semifield: TropSemifield = TropSemifield(), prefix: str = "x"):
        self.n = n
        self.semifield = semifield
        self.variable_names = tuple(f"{prefix}{i + 1}" for i in range(n))
        names = self.variable_names + semifield.generators
        if len(set(names)) != len(names):
            raise InputError(f"variable and generator names overlap: {list(names)}")
        self.poly_ring: PolyRing = ring(",".join(names), ZZ)[0]
        self._width = len(self.poly_ring.gens)

    def monomial(self, x_exponents: Sequence[int] = (), p_exponents: Sequence[int] = (), coeff: int = 1) -> PolyElement:
        exps = [0] * self._width
        for i, e in enumerate(x_exponents):
            exps[i] = e
        for j, e in enumerate(p_exponents):
            exps[self.n + j] = e
        return self.poly_ring.from_dict({tuple(exps): coeff})

    def variable(self, i: int) -> 'LaurentExpression':
        return LaurentExpression.build(self, self.monomial(), tuple(1 if j == i else 0 for j in range(self.n)))

    def constant(self, value: int = 1) -> 'LaurentExpression':
        return LaurentExpression.build(self, self.monomial(coeff=value), (0,) * self.n)

    def coefficient(self, element: TropElement) -> 'LaurentExpression':
        """A semifield monomial with nonnegative exponents, as a ring element."""
        if min(element, default=0) < 0:
            raise InputError(f"coefficient {self.semifield.format(element)} has a negative exponent")
        return LaurentExpression.build(self, self.monomial(p_exponents=element), (0,) * self.n)

    def x_monomial(self, exponents: Sequence[int]) -> 'LaurentExpression':
        return LaurentExpression.build(self, self.monomial(), tuple(exponents))


@dataclass(frozen=True)
class LaurentExpression:
    """
    numerator * x^shift with the numerator free of any monomial factor in x.

    That normal form is unique, so `key` identifies the value.
    """
    numerator: PolyElement = field(compare=False, hash=False)
    shift: Tuple[int, ...]
    terms: Tuple[Tuple[Monomial, int], ...]
    ring: LaurentRing = field(compare=False, hash=False, repr=False)

    @classmethod
    def build(cls, lring: LaurentRing, numerator: PolyElement, shift: Sequence[int]) -> 'LaurentExpression':
        n = lring.n
        shift = list(shift)
        if numerator:
            content = [min(m[i] for m in numerator.keys()) for i in range(n)]
            if any(content):
                moved = {}
                for m, c in numerator.items():
                    moved[tuple(m[i] - content[i] if i < n else m[i] for i in range(len(m)))] = c
                numerator = lring.poly_ring.from_dict(moved)
                shift = [s + c for s, c in zip(shift, content)]
        else:
            shift = [0] * n
        return cls(numerator, tuple(shift), tuple(sorted(numerator.terms())), lring)

    @property
    def key(self) -> Tuple:
        return (self.terms, self.shift)

    def is_zero(self) -> bool:
        return not self.numerator

    def __mul__(self, other: 'LaurentExpression') -> 'LaurentExpression':
        return LaurentExpression.build(self.ring, self.numerator * other.numerator,
                                       [a + b for a, b in zip(self.shift, other.shift)])

    def __pow__(self, k: int) -> 'LaurentExpression':
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        return LaurentExpression.build(self.ring, self.numerator ** k, [s * k for s in self.shift])

    def __add__(self, other: 'LaurentExpression') -> 'LaurentExpression':
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = [min(a, b) for a, b in zip(self.shift, other.shift)]
        left = self.numerator * self.ring.monomial([a - m for a, m in zip(self.shift, low)])
        right = other.numerator * self.ring.monomial([b - m for b, m in zip(other.shift, low)])
        return LaurentExpression.build(self.ring, left + right, low)

    def exact_divide(self, other: 'LaurentExpression') -> 'LaurentExpression':
        """self / other in the Laurent ring; InexactDivisionError if the quotient is not Laurent."""
        if other.is_zero():
            raise InexactDivisionError("division by zero")
        try:
            quotient = self.numerator.exquo(other.numerator)
        except ExactQuotientFailed:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return LaurentExpression.build(self.ring, quotient, [a - b for a, b in zip(self.shift, other.shift)])

    def x_degrees(self, monomial: Monomial) -> Tuple[int, ...]:
        return tuple(monomial[: self.ring.n])

    def p_degrees(self, monomial: Monomial) -> Tuple[int, ...]:
        return tuple(monomial[self.ring.n:])

    def numerator_coefficients(self) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]:
        """{(x exponents, p exponents): integer} for the numerator."""
        return {(self.x_degrees(m), self.p_degrees(m)): c for m, c in self.terms}

    def has_constant_term(self) -> bool:
        """True if some numerator term is free of x (its p part may be anything)."""
        return any(not any(self.x_degrees(m)) for m, _ in self.terms)

    def __str__(self) -> str:
        return format_laurent(self)


def _format_monomial(expr: LaurentExpression, monomial: Monomial) -> List[str]:
    names = expr.ring.semifield.generators
    factors = []
    for name, e in zip(names, expr.p_degrees(monomial)):
        if e:
            factors.append(name if e == 1 else f"{name}^{e}")
    for name, e in zip(expr.ring.variable_names, expr.x_degrees(monomial)):
        if e:
            factors.append(name if e == 1 else f"{name}^{e}")
    return factors


def format_laurent(expr: LaurentExpression) -> str:
    """Canonical text: '(1+x2)/x1', 'x1', '(1+x1+x2)/(x1*x2)'."""
    if expr.is_zero():
        return "0"
    ordered = sorted(expr.terms, key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
    pieces = []
    for monomial, coeff in ordered:
        factors = _format_monomial(expr, monomial)
        body = "*".join(factors)
        magnitude = abs(coeff)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        sign = "-" if coeff < 0 else "+"
        pieces.append((sign, text))
    numerator = "".join((s if i or s == "-" else "") + t for i, (s, t) in enumerate(pieces))
    up = [n if e == 1 else f"{n}^{e}" for n, e in zip(expr.ring.variable_names, expr.shift) if e > 0]
    down = [n if e == -1 else f"{n}^{-e}" for n, e in zip(expr.ring.variable_names, expr.shift) if e < 0]
    if up:
        if len(pieces) == 1 and numerator in ("1", "-1"):
            numerator = ("-" if numerator == "-1" else "") + "*".join(up)
        elif len(pieces) == 1:
            numerator = numerator + "*" + "*".join(up)
        else:
            numerator = "*".join(up) + "*(" + numerator + ")"
    elif down and len(pieces) > 1:
        numerator = f"({numerator})"
    if not down:
        return numerator
    denominator = "*".join(down)
    return f"{numerator}/({denominator})" if len(down) > 1 else f"{numerator}/{denominator}"
