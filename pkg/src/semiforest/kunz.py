"""Kunz-coordinates vectors of genus-g semigroups, taken with respect to 2g.

Bit layout: a vector ``x_1 .. x_{2g-1}`` is packed in a Python int with
``x_i`` at bit ``i - 1``.  ``x_i == 1`` means ``i`` is a gap.  Every predicate
below is written against that packed form so that the forest engine can run
on plain ints; :class:`KunzVector` is the typed wrapper handed to callers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .semigroup import GENUS_CAP, GapSemigroup, apery_set


class NotAKunzVectorError(ValueError):
    pass


def _bit(i: int) -> int:
    return 1 << (i - 1)


def width(g: int) -> int:
    return 2 * g - 1


def full_mask(g: int) -> int:
    return (1 << (2 * g - 1)) - 1


def lowest_zero(bits: int) -> int:
    """Smallest ``i >= 1`` with ``x_i == 0`` (may lie past the window)."""
    return ((~bits) & (bits + 1)).bit_length()


def closure_violation_bits(bits: int, length: int, upto: Optional[int] = None) -> Optional[tuple[int, int]]:
    """First ``(i, j)``, ``i <= j``, with ``x_i + x_j - x_{i+j} < 0`` and ``i + j <= upto``."""
    if upto is None:
        upto = length
    members = ~bits & ((1 << length) - 1)
    window = (1 << upto) - 1
    i = lowest_zero(bits)
    while 2 * i <= upto:
        if members >> (i - 1) & 1:
            hits = (members << i) & bits & window
            # only pairs with j >= i matter: mask away sums i + j < 2i
            hits &= ~((1 << (2 * i - 1)) - 1)
            if hits:
                s = (hits & -hits).bit_length()
                return i, s - i
        i += 1
    return None


@dataclass(frozen=True)
class KunzVector:
    genus: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.genus <= GENUS_CAP:
            raise ValueError(f"genus must be in [1, {GENUS_CAP}], got {self.genus}")
        if self.bits < 0 or self.bits >> width(self.genus):
            raise ValueError("bits do not fit in 2g - 1 coordinates")

    @classmethod
    def from_sequence(cls, xs: Iterable[int]) -> "KunzVector":
        xs = list(xs)
        if len(xs) % 2 == 0:
            raise ValueError("a Kunz vector has odd length 2g - 1")
        bits = 0
        for i, v in enumerate(xs, start=1):
            if v not in (0, 1):
                raise ValueError(f"coordinate {i} is {v}, expected 0 or 1")
            if v:
                bits |= _bit(i)
        return cls((len(xs) + 1) // 2, bits)

    @classmethod
    def from_text(cls, text: str) -> "KunzVector":
        return cls.from_sequence(int(c) for c in text.strip())

    @property
    def length(self) -> int:
        return width(self.genus)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return self.bits >> (i - 1) & 1

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.bits >> k & 1 for k in range(self.length))

    def support(self) -> list[int]:
        return [i for i in range(1, self.length + 1) if self.bits >> (i - 1) & 1]

    def text(self) -> str:
        return "".join("1" if self.bits >> k & 1 else "0" for k in range(self.length))

    def __str__(self):
        return self.text()


def is_kunz_vector(bits: Iterable[int]) -> bool:
    v = KunzVector.from_sequence(bits)
    return _is_kunz(v.bits, v.genus)


def _is_kunz(bits: int, g: int) -> bool:
    return bin(bits).count("1") == g and closure_violation_bits(bits, width(g)) is None


def is_kunz_of_FG(bits: Iterable[int], F: int) -> bool:
    v = KunzVector.from_sequence(bits)
    return is_kunz_of_FG_bits(v.bits, v.genus, F)


def is_kunz_of_FG_bits(bits: int, g: int, F: int) -> bool:
    L = width(g)
    if not 1 <= F <= L or not bits >> (F - 1) & 1:
        return False
    if bits >> F:
        return False
    if bin(bits).count("1") != g:
        return False
    return closure_violation_bits(bits, L, upto=F) is None


def kunz_from_semigroup(S: GapSemigroup) -> KunzVector:
    g = S.genus
    if g == 0:
        raise ValueError("N has genus 0 and no Kunz vector with respect to 2g")
    bits = 0
    for gap in S.gaps:
        bits |= _bit(gap)
    return KunzVector(g, bits)


def kunz_from_apery(S: GapSemigroup) -> KunzVector:
    """Same vector as :func:`kunz_from_semigroup`, via ``x_i = (w_i - i) / 2g``."""
    g = S.genus
    if g == 0:
        raise ValueError("N has genus 0 and no Kunz vector with respect to 2g")
    n = 2 * g
    w = apery_set(S, n)
    xs = []
    for i in range(1, n):
        q, r = divmod(w[i] - i, n)
        assert r == 0
        xs.append(q)
    return KunzVector.from_sequence(xs)


def kunz_generators(x: KunzVector) -> list[int]:
    """Generators ``2g, 2g*x_1 + 1, ..., 2g*x_{2g-1} + 2g - 1`` of S_x."""
    n = 2 * x.genus
    return [n] + [n * x[i] + i for i in range(1, n)]


def check_kunz(x: KunzVector) -> None:
    if bin(x.bits).count("1") != x.genus:
        raise NotAKunzVectorError(
            f"not a Kunz vector: coordinates sum to {bin(x.bits).count('1')}, expected {x.genus}")
    bad = closure_violation_bits(x.bits, x.length)
    if bad is not None:
        i, j = bad
        raise NotAKunzVectorError(f"not a Kunz vector: x_{i} + x_{j} - x_{i + j} < 0")


def semigroup_from_kunz(x: KunzVector) -> GapSemigroup:
    check_kunz(x)
    return GapSemigroup(tuple(x.support()))


class KunzInvariants(NamedTuple):
    frobenius: int
    multiplicity: int
    generators: list[int]
    pseudo_frobenius: list[int]


def frobenius_bits(bits: int) -> int:
    return bits.bit_length()


def is_min_generator_bits(bits: int, i: int) -> bool:
    """``x_i == 0`` and ``x_j + x_{i-j} >= 1`` for every ``1 <= j < i``."""
    if bits >> (i - 1) & 1:
        return False
    for j in range(1, i // 2 + 1):
        if not (bits >> (j - 1) & 1 or bits >> (i - j - 1) & 1):
            return False
    return True


def is_pseudo_frobenius_bits(bits: int, length: int, i: int) -> bool:
    """``x_i == 1`` and ``x_j >= x_{i+j}`` for ``j = 1 .. length - i``."""
    if not bits >> (i - 1) & 1:
        return False
    members = ~bits & ((1 << length) - 1)
    return ((members << i) & bits) == 0


def kunz_invariants(x: KunzVector) -> KunzInvariants:
    """Frobenius number, multiplicity, minimal generators in ``[1, 2g-1]`` and
    pseudo-Frobenius numbers, all read off the vector.

    Generators at or beyond ``2g`` are outside the window and are not reported.
    """
    L = x.length
    return KunzInvariants(
        frobenius=frobenius_bits(x.bits),
        multiplicity=lowest_zero(x.bits),
        generators=[i for i in range(1, L + 1) if is_min_generator_bits(x.bits, i)],
        pseudo_frobenius=[i for i in range(1, L + 1) if is_pseudo_frobenius_bits(x.bits, L, i)],
    )
