"""The forest of Sem(g): one tree per elementary root, walked over Kunz vectors.

Every S in Sem(F, g) is tied to exactly one elementary semigroup by the
projection ``theta`` that swaps each small element ``x < F/2`` for ``F - x``.
Inside a class, the parent of a node is obtained by replacing its
multiplicity ``m`` with ``F - m``; children are found by the reverse move,
restricted to the indices that keep the result a semigroup in the same class.

The hot path (``_gamma``, ``_walk``) works on packed ints; see :mod:`.kunz`
for the layout.  Class traversals are independent, so they are the unit of
work handed to worker processes.
"""
from __future__ import annotations

import os
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, as_completed, wait
from typing import Callable, Iterator, Optional

from .elementary import (
    InfeasibleError,
    count_elementary,
    enumerate_elementary,
    feasible,
    is_elementary,
)
from .kunz import (
    KunzVector,
    is_kunz_of_FG_bits,
    lowest_zero,
    width,
)
from .semigroup import (
    GapSemigroup,
    minimal_generators,
    pseudo_frobenius,
    remove_generator,
    swap,
)

Visitor = Callable[[KunzVector, int, int], object]


class NotInClassError(ValueError):
    pass


# -- projections -------------------------------------------------------------

def theta(S: GapSemigroup, F: int) -> GapSemigroup:
    if S.frobenius != F or not feasible(F, S.genus):
        raise NotInClassError(f"semigroup is not in Sem({F}, {S.genus})")
    gaps = set(S.gaps)
    for x in range(1, (F + 1) // 2):
        if x not in gaps:
            gaps.add(x)
            gaps.discard(F - x)
    return GapSemigroup(tuple(sorted(gaps)))


def theta_bits(bits: int, F: int) -> int:
    for i in range(1, (F + 1) // 2):
        if not bits >> (i - 1) & 1:
            bits |= 1 << (i - 1)
            bits &= ~(1 << (F - i - 1))
    return bits


def theta_kunz(x: KunzVector, F: int) -> KunzVector:
    if not is_kunz_of_FG_bits(x.bits, x.genus, F):
        raise NotInClassError(f"vector {x.text()} is not in Kunz({F}, {x.genus})")
    return KunzVector(x.genus, theta_bits(x.bits, F))


def parent_bits(bits: int, F: int) -> Optional[int]:
    m = lowest_zero(bits)
    if F <= 2 * m:
        return None
    return (bits | 1 << (m - 1)) & ~(1 << (F - m - 1))


def parent_step(x: KunzVector, F: int) -> Optional[KunzVector]:
    """Move the multiplicity ``m`` to ``F - m``; ``None`` once ``F <= 2m``."""
    p = parent_bits(x.bits, F)
    return None if p is None else KunzVector(x.genus, p)


def parent_semigroup(S: GapSemigroup, F: int) -> Optional[GapSemigroup]:
    m = S.multiplicity
    if F <= 2 * m:
        return None
    return swap(S, out=m, into=F - m)


def class_root(x: KunzVector, F: int) -> KunzVector:
    """Follow parent steps up to the elementary vector at the top of the tree."""
    bits = x.bits
    while True:
        p = parent_bits(bits, F)
        if p is None:
            return KunzVector(x.genus, bits)
        bits = p


# -- children ----------------------------------------------------------------

def _gamma(z: int, F: int, L: int) -> list[int]:
    """Indices ``i`` whose swap ``z + e_i - e_{F-i}`` yields a child of ``z``."""
    m = lowest_zero(z)
    members = ~z & ((1 << L) - 1)
    out = []
    # F/2 < i < F and F - i < m
    for i in range(max(F // 2 + 1, F - m + 1), F):
        if 3 * i == 2 * F:
            continue
        if z >> (i - 1) & 1:
            continue
        d = 2 * (F - i)
        if z >> (d - 1) & 1:
            continue
        if not _min_gen(z, i) or not _min_gen(z, d):
            continue
        # F - i is pseudo-Frobenius in z + e_i: no member j with F - i + j a gap
        y = z | 1 << (i - 1)
        if ((members & ~(1 << (i - 1))) << (F - i)) & y:
            continue
        out.append(i)
    return out


def _min_gen(z: int, i: int) -> bool:
    for j in range(1, i // 2 + 1):
        if not (z >> (j - 1) & 1 or z >> (i - j - 1) & 1):
            return False
    return True


def gamma(z: KunzVector, F: int) -> list[int]:
    return _gamma(z.bits, F, z.length)


def children(z: KunzVector, F: int) -> list[KunzVector]:
    return [KunzVector(z.genus, (z.bits | 1 << (i - 1)) & ~(1 << (F - i - 1)))
            for i in _gamma(z.bits, F, z.length)]


def children_semigroup(Q: GapSemigroup, F: int) -> list[GapSemigroup]:
    """Children of ``Q`` computed on the semigroup itself, from its minimal
    generators and pseudo-Frobenius numbers.  Slow; kept as a cross-check on
    :func:`children`."""
    gens = minimal_generators(Q)
    gen_set = set(gens)
    m = Q.multiplicity
    out = []
    for x in gens:
        if not (F < 2 * x and x < F):
            continue
        if not F - x < m:
            continue
        if 2 * F == 3 * x:
            continue
        if 2 * (F - x) not in gen_set:
            continue
        if F - x not in pseudo_frobenius(remove_generator(Q, x)):
            continue
        out.append(swap(Q, out=x, into=F - x))
    return out


# -- traversal ---------------------------------------------------------------

def _walk(root: int, F: int, L: int) -> Iterator[int]:
    """Depth-first, root first, children in increasing swap index."""
    stack = [root]
    while stack:
        z = stack.pop()
        yield z
        kids = _gamma(z, F, L)
        for i in reversed(kids):
            stack.append((z | 1 << (i - 1)) & ~(1 << (F - i - 1)))


def _count_walk(root: int, F: int, L: int) -> int:
    n = 0
    for _ in _walk(root, F, L):
        n += 1
    return n


def traverse_class(root: KunzVector, F: int, visitor: Optional[Visitor] = None, check: bool = False) -> int:
    if not is_kunz_of_FG_bits(root.bits, root.genus, F) or not is_elementary(root):
        raise NotInClassError(f"{root.text()} is not an elementary vector of Kunz({F}, {root.genus})")
    g = root.genus
    L = width(g)
    n = 0
    for z in _walk(root.bits, F, L):
        if check and not is_kunz_of_FG_bits(z, g, F):
            raise AssertionError(f"visited {KunzVector(g, z).text()} outside Kunz({F}, {g})")
        if visitor is not None:
            visitor(KunzVector(g, z), F, g)
        n += 1
    return n


# -- drivers -----------------------------------------------------------------

def frobenius_range(g: int) -> range:
    return range(g, 2 * g)


def genus_range(F: int) -> range:
    return range(F // 2 + 1, F + 1)


def _tasks(pairs, workers: int):
    """Split each E(F, g) into rank ranges, a few per worker."""
    for F, g in pairs:
        total = count_elementary(F, g)
        size = max(1, -(-total // (4 * workers)))
        for start in range(0, total, size):
            yield F, g, start, min(total, start + size)


def _count_task(task) -> int:
    F, g, start, stop = task
    L = width(g)
    return sum(_count_walk(s.bits, F, L) for s in enumerate_elementary(F, g, start, stop))


def _collect_task(task) -> tuple[int, int, list[int]]:
    F, g, start, stop = task
    L = width(g)
    out = []
    for s in enumerate_elementary(F, g, start, stop):
        out.extend(_walk(s.bits, F, L))
    return F, g, out


def default_workers() -> int:
    return max(1, int(os.environ.get("SEMIFOREST_THREADS", "1")))


def _run(pairs: list[tuple[int, int]], visitor: Optional[Visitor], workers: int, check: bool) -> int:
    if workers <= 1:
        total = 0
        for F, g in pairs:
            for seed in enumerate_elementary(F, g):
                total += traverse_class(seed.kunz, F, visitor, check=check)
        return total

    tasks = _tasks(pairs, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        if visitor is None and not check:
            return sum(r for r in _bounded(pool, _count_task, tasks, workers))
        total = 0
        for F, g, nodes in _bounded(pool, _collect_task, tasks, workers):
            for z in nodes:
                if check and not is_kunz_of_FG_bits(z, g, F):
                    raise AssertionError(f"visited {KunzVector(g, z).text()} outside Kunz({F}, {g})")
                if visitor is not None:
                    visitor(KunzVector(g, z), F, g)
            total += len(nodes)
        return total


def _bounded(pool, fn, tasks, workers):
    """Results in completion order, keeping at most ``2 * workers`` tasks queued."""
    pending = set()
    for task in tasks:
        pending.add(pool.submit(fn, task))
        if len(pending) >= 2 * workers:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                yield fut.result()
    for fut in as_completed(pending):
        yield fut.result()


def enumerate_FG(F: int, g: int, visitor: Optional[Visitor] = None, workers: int = 1, check: bool = False) -> int:
    """Visit every semigroup of Sem(F, g) once; returns how many were visited."""
    if not feasible(F, g):
        raise InfeasibleError(f"no numerical semigroup has Frobenius number {F} and genus {g}")
    return _run([(F, g)], visitor, workers, check)


def enumerate_genus(g: int, visitor: Optional[Visitor] = None, workers: int = 1, check: bool = False) -> int:
    if g < 1:
        raise InfeasibleError("genus must be a positive integer")
    return _run([(F, g) for F in frobenius_range(g)], visitor, workers, check)


def enumerate_frobenius(F: int, visitor: Optional[Visitor] = None, workers: int = 1, check: bool = False) -> int:
    """All semigroups with Frobenius number ``F``, any genus."""
    if F < 1:
        raise InfeasibleError("Frobenius number must be a positive integer")
    return _run([(F, g) for g in genus_range(F)], visitor, workers, check)


def count_genus(g: int, workers: int = 1) -> int:
    return enumerate_genus(g, None, workers)

