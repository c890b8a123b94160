"""Irreducible semigroups with a fixed Frobenius number.

Irreducible means ``g = ceil((F+1)/2)``, so I(F) is the single class
Sem(F, ceil((F+1)/2)) and its only elementary root is
T(F) = {0, ceil((F+1)/2), ..., F-1, F+1, ->}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .elementary import enumerate_elementary, reflect_window
from .forest import traverse_class
from .kunz import KunzVector, semigroup_from_kunz
from .semigroup import GapSemigroup

SYMMETRIC = "symmetric"
PSEUDO_SYMMETRIC = "pseudo-symmetric"


@dataclass(frozen=True)
class IrreducibleClassification:
    kind: str
    semigroup: GapSemigroup


def irreducible_genus(F: int) -> int:
    return F // 2 + 1


def kind_for(F: int) -> str:
    return SYMMETRIC if F % 2 else PSEUDO_SYMMETRIC


def classify(S: GapSemigroup) -> Optional[IrreducibleClassification]:
    if not S.gaps:
        raise ValueError("N has no Frobenius number")
    F = S.frobenius
    if S.genus != irreducible_genus(F):
        return None
    return IrreducibleClassification(kind_for(F), S)


def t_root(F: int) -> GapSemigroup:
    small = set(reflect_window(F))
    return GapSemigroup(tuple(i for i in range(1, F + 1) if i not in small))


def enumerate_irreducible(F: int, visitor: Optional[Callable[[IrreducibleClassification], object]] = None) -> int:
    """Walk I(F) from its root T(F); the visitor gets each tagged semigroup."""
    if F < 1:
        raise ValueError("Frobenius number must be a positive integer")
    g = irreducible_genus(F)
    seeds = list(enumerate_elementary(F, g))
    assert len(seeds) == 1 and seeds[0].semigroup == t_root(F)
    kind = kind_for(F)

    def visit(x: KunzVector, F_: int, g_: int):
        if visitor is not None:
            visitor(IrreducibleClassification(kind, semigroup_from_kunz(x)))

    return traverse_class(seeds[0].kunz, F, visit)
