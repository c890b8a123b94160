"""Elementary semigroups (F < 2m): the roots of the class trees."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterator, Optional, Union

from .kunz import KunzVector, frobenius_bits, lowest_zero
from .semigroup import GapSemigroup


class InfeasibleError(ValueError):
    """No semigroup has this (Frobenius number, genus) pair."""


def feasible(F: int, g: int) -> bool:
    return 1 <= g <= F <= 2 * g - 1


def _require(F: int, g: int) -> None:
    if not feasible(F, g):
        raise InfeasibleError(f"no numerical semigroup has Frobenius number {F} and genus {g}")


def reflect_window(F: int) -> range:
    """``ceil((F+1)/2) .. F-1``, the possible small elements of an elementary root."""
    return range(F // 2 + 1, F)


def count_elementary(F: int, g: int) -> int:
    _require(F, g)
    return comb((F + 1) // 2 - 1, F - g)


def elementary_bits(F: int, A) -> int:
    """Packed Kunz vector with ones on ``1..F`` except the elements of ``A``."""
    bits = (1 << F) - 1
    for a in A:
        bits &= ~(1 << (a - 1))
    return bits


@dataclass(frozen=True)
class ElementarySeed:
    F: int
    g: int
    A: tuple[int, ...]

    @property
    def bits(self) -> int:
        return elementary_bits(self.F, self.A)

    @property
    def kunz(self) -> KunzVector:
        return KunzVector(self.g, self.bits)

    @property
    def semigroup(self) -> GapSemigroup:
        small = set(self.A)
        return GapSemigroup(tuple(i for i in range(1, self.F + 1) if i not in small))


def enumerate_elementary(F: int, g: int, start: int = 0, stop: Optional[int] = None) -> Iterator[ElementarySeed]:
    """Seeds of E(F, g) in lexicographic order of A.

    ``start``/``stop`` select a slice by combinatorial rank, for splitting the
    stream between workers.
    """
    _require(F, g)
    subsets = combinations(reflect_window(F), F - g)
    for A in islice(subsets, start, stop):
        yield ElementarySeed(F, g, A)


def is_elementary(S: Union[GapSemigroup, KunzVector]) -> bool:
    if isinstance(S, KunzVector):
        return frobenius_bits(S.bits) < 2 * lowest_zero(S.bits)
    if not S.gaps:
        return False
    return S.frobenius < 2 * S.multiplicity
