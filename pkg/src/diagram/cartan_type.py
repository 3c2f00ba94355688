from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from src.utils.errors import InputError

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_COMPONENT = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True)
class CartanKillingType:
    """Multiset of irreducible finite types, stored sorted by (family, rank)."""
    components: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        parts = tuple(sorted((str(f).upper(), int(r)) for f, r in self.components))
        if not parts:
            raise InputError("a Cartan-Killing type needs at least one component")
        for family, rank in parts:
            if family not in _RANK_BOUNDS:
                raise InputError(f"unknown family '{family}'")
            low, high = _RANK_BOUNDS[family]
            if rank < low or (high is not None and rank > high):
                raise InputError(f"invalid rank {rank} for family {family}")
        object.__setattr__(self, 'components', parts)

    @classmethod
    def of(cls, parts: Iterable[Tuple[str, int]]) -> 'CartanKillingType':
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> 'CartanKillingType':
        """Reads 'A3', 'B2xA1' or 'A1×A1'; C2 is read as B2."""
        parts = []
        for piece in re.split(r"[×x*]", text.strip()):
            match = _COMPONENT.match(piece.strip().upper())
            if match is None:
                raise InputError(f"cannot parse type '{text}'")
            family, rank = match.group(1), int(match.group(2))
            if family == "C" and rank == 2:
                family = "B"
            parts.append((family, rank))
        return cls(tuple(parts))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    def __str__(self) -> str:
        return "×".join(f"{f}{r}" for f, r in self.components)
