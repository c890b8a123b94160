"""Numerical semigroups stored as their (finite) gap sets.

A numerical semigroup S is determined by N \\ S, so a sorted tuple of gaps is
the whole state.  Everything above the Frobenius number is in S, which keeps
all closure and generator checks finite: nothing beyond ``2*F + 2`` ever needs
to be looked at.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

GENUS_CAP = 64


class NotASemigroupError(ValueError):
    """Raised when a gap set or generator set does not describe a numerical semigroup."""


@dataclass(frozen=True)
class GapSemigroup:
    gaps: tuple[int, ...] = ()

    def __post_init__(self):
        gaps = tuple(self.gaps)
        object.__setattr__(self, "gaps", gaps)
        if gaps and gaps[0] <= 0:
            raise NotASemigroupError("gaps must be positive integers (0 always belongs to S)")
        if any(a >= b for a, b in zip(gaps, gaps[1:])):
            raise NotASemigroupError("gaps must be strictly increasing")

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "GapSemigroup":
        """Build from an arbitrary iterable of gaps, checking additive closure."""
        S = cls(tuple(sorted(set(gaps))))
        bad = closure_violation(S)
        if bad is not None:
            a, b = bad
            raise NotASemigroupError(f"{a} and {b} are in S but {a + b} is a gap")
        return S

    @cached_property
    def _gapset(self) -> frozenset:
        return frozenset(self.gaps)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> Optional[int]:
        """Largest gap; ``None`` for S = N, which has no Frobenius number."""
        return self.gaps[-1] if self.gaps else None

    @property
    def multiplicity(self) -> int:
        for m, gap in enumerate(self.gaps, start=1):
            if m != gap:
                return m
        return len(self.gaps) + 1

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gapset

    def elements(self, bound: int) -> list[int]:
        """Members of S in ``[0, bound]``."""
        return [n for n in range(bound + 1) if n not in self._gapset]

    def canonical(self) -> str:
        return ",".join(map(str, self.gaps))

    def __repr__(self):
        return f"GapSemigroup(<{','.join(map(str, minimal_generators(self)))}>)"


NATURALS = GapSemigroup(())


def closure_violation(S: GapSemigroup) -> Optional[tuple[int, int]]:
    """First pair ``(a, b)`` of nonzero members with ``a + b`` a gap, or None."""
    if not S.gaps:
        return None
    members = S.elements(S.frobenius)
    for i, a in enumerate(members):
        if a == 0:
            continue
        for b in members[i:]:
            if a + b > S.frobenius:
                break
            if a + b not in S:
                return a, b
    return None


def is_closed(S: GapSemigroup) -> bool:
    return closure_violation(S) is None


def from_generators(gens: Iterable[int]) -> GapSemigroup:
    """Gap set of the submonoid of N generated by ``gens``.

    The sieve bound doubles until the tail of the sieve holds a run of
    consecutive members at least as long as the smallest generator; from
    there on every integer is reachable by adding that generator.
    """
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    d = 0
    for a in gens:
        d = gcd(d, a)
    if d != 1:
        raise NotASemigroupError(f"not a numerical semigroup: gcd of generators is {d}")

    smallest = gens[0]
    bound = 2 * max(gens)
    while True:
        member = bytearray(bound + 1)
        member[0] = 1
        for n in range(1, bound + 1):
            for a in gens:
                if a > n:
                    break
                if member[n - a]:
                    member[n] = 1
                    break
        run = 0
        n = bound
        while n >= 0 and member[n]:
            run += 1
            n -= 1
        if run >= smallest:
            return GapSemigroup(tuple(k for k in range(1, bound + 1) if not member[k]))
        bound *= 2


def membership(S: GapSemigroup, n: int) -> bool:
    return n in S


def minimal_generators(S: GapSemigroup) -> list[int]:
    """Nonzero members that are not a sum of two nonzero members."""
    if not S.gaps:
        return [1]
    # every minimal generator is at most F + m
    bound = S.frobenius + S.multiplicity
    members = S.elements(bound)[1:]
    gens = []
    for n in members:
        if not any((n - a) in S for a in members if 2 * a <= n):
            gens.append(n)
    return gens


def pseudo_frobenius(S: GapSemigroup) -> list[int]:
    if not S.gaps:
        raise ValueError("no pseudo-Frobenius numbers: the semigroup is N")
    F = S.frobenius
    members = S.elements(F)[1:]
    return [x for x in S.gaps if all((x + s) in S for s in members)]


def semigroup_type(S: GapSemigroup) -> int:
    return len(pseudo_frobenius(S))


def apery_set(S: GapSemigroup, n: int) -> list[int]:
    """``w[i]`` is the least member of S congruent to ``i`` mod ``n``."""
    if n < 1 or n not in S:
        raise ValueError(f"{n} is not a positive element of the semigroup")
    w: list[Optional[int]] = [None] * n
    missing = n
    s = 0
    while missing:
        if s in S and w[s % n] is None:
            w[s % n] = s
            missing -= 1
        s += 1
    return w  # type: ignore[return-value]


def selmer_genus(w: Sequence[int]) -> int:
    n = len(w)
    total = 2 * sum(w) - n * (n - 1)
    assert total % (2 * n) == 0, "Apery set sum is inconsistent"
    return total // (2 * n)


def selmer_frobenius(w: Sequence[int]) -> int:
    return max(w) - len(w)


def remove_generator(S: GapSemigroup, x: int) -> GapSemigroup:
    """``S \\ {x}``; only a semigroup when ``x`` is a minimal generator."""
    if x not in S or x == 0:
        raise ValueError(f"{x} is not a nonzero element of the semigroup")
    return GapSemigroup(tuple(sorted(S.gaps + (x,))))


def swap(S: GapSemigroup, out: int, into: int) -> GapSemigroup:
    """``(S \\ {out}) U {into}`` as a gap set, no closure check."""
    gaps = set(S.gaps)
    gaps.add(out)
    gaps.discard(into)
    return GapSemigroup(tuple(sorted(gaps)))
