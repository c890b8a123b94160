"""Brute-force reference enumerations, for checking the forest engine.

Deliberately naive and independent of :mod:`.forest`: the genus tree uses
only gap-set primitives, and the Kunz-space scan tests the defining
inequalities on plain tuples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .kunz import KunzVector
from .semigroup import NATURALS, GapSemigroup, minimal_generators

GENUS_TREE_CAP = 12
KUNZ_SCAN_CAP = 7


def oracle_genus_tree(g_max: int, cap: int = GENUS_TREE_CAP) -> dict[int, set[GapSemigroup]]:
    """Sem(k) for k = 0..g_max, grown from N by removing generators above F."""
    if g_max > cap:
        raise ValueError(f"genus tree oracle refuses g_max={g_max} (cap is {cap})")
    levels = {0: {NATURALS}}
    for k in range(1, g_max + 1):
        level = set()
        for S in levels[k - 1]:
            F = S.frobenius if S.gaps else 0
            for x in minimal_generators(S):
                if x > F:
                    level.add(GapSemigroup(tuple(sorted(S.gaps + (x,)))))
        levels[k] = level
    return levels


def _kunz_ok(xs: tuple[int, ...], g: int) -> bool:
    if sum(xs) != g:
        return False
    L = len(xs)
    for i in range(1, L + 1):
        for j in range(i, L + 1 - i):
            if xs[i - 1] + xs[j - 1] - xs[i + j - 1] < 0:
                return False
    return True


def oracle_kunz_exhaustive(g: int, cap: int = KUNZ_SCAN_CAP) -> set[KunzVector]:
    """Every 0/1 vector of length 2g-1 passing the Kunz(g) inequalities."""
    if g > cap:
        raise ValueError(f"exhaustive Kunz oracle refuses g={g} (cap is {cap})")
    if g < 1:
        raise ValueError("genus must be positive")
    return {KunzVector.from_sequence(xs)
            for xs in product((0, 1), repeat=2 * g - 1) if _kunz_ok(xs, g)}


@dataclass
class OracleReport:
    g: int
    F: Optional[int]
    expected: set[str]
    actual: set[str]
    kunz_scan: Optional[set[str]] = None
    missing: set[str] = field(init=False)
    extra: set[str] = field(init=False)

    def __post_init__(self):
        self.missing = self.expected - self.actual
        self.extra = self.actual - self.expected

    @property
    def kunz_agrees(self) -> bool:
        return self.kunz_scan is None or self.kunz_scan == self.expected

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra and self.kunz_agrees

    @property
    def counts(self) -> dict[str, int]:
        out = {"expected": len(self.expected), "actual": len(self.actual)}
        if self.kunz_scan is not None:
            out["kunz_scan"] = len(self.kunz_scan)
        return out

    def key_values(self) -> dict[str, object]:
        kv: dict[str, object] = {"genus": self.g}
        if self.F is not None:
            kv["frobenius"] = self.F
        kv.update({f"count_{k}": v for k, v in self.counts.items()})
        kv["missing"] = len(self.missing)
        kv["extra"] = len(self.extra)
        kv["kunz_scan_agrees"] = self.kunz_agrees if self.kunz_scan is not None else "skipped"
        kv["status"] = "pass" if self.passed else "fail"
        return kv

    def render_kv(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.key_values().items())

    def render_text(self) -> str:
        target = f"Sem({self.F}, {self.g})" if self.F is not None else f"Sem({self.g})"
        lines = [f"{target}: {'PASS' if self.passed else 'FAIL'}"]
        c = self.counts
        lines.append(f"  genus-tree oracle: {c['expected']}")
        lines.append(f"  forest engine:     {c['actual']}")
        if self.kunz_scan is not None:
            lines.append(f"  Kunz-space scan:   {c['kunz_scan']}")
        else:
            lines.append("  Kunz-space scan:   skipped (genus above scan cap)")
        for label, items in (("missing", self.missing), ("extra", self.extra)):
            for gaps in sorted(items):
                lines.append(f"  {label}: gaps {{{gaps}}}")
        return "\n".join(lines)


def verify(g: int, F: Optional[int] = None, workers: int = 1) -> OracleReport:
    """Compare the forest engine against both oracles for Sem(g) or Sem(F, g)."""
    from .forest import enumerate_FG, enumerate_genus

    expected_sgs = oracle_genus_tree(g)[g]
    if F is not None:
        expected_sgs = {S for S in expected_sgs if S.frobenius == F}
    expected = {S.canonical() for S in expected_sgs}

    actual: list[str] = []

    def visit(x, F_, g_):
        actual.append(",".join(map(str, x.support())))

    if F is None:
        enumerate_genus(g, visit, workers=workers)
    else:
        enumerate_FG(F, g, visit, workers=workers)
    if len(actual) != len(set(actual)):
        # a duplicate visit is a failure even if the sets match
        dupes = {a for a in actual if actual.count(a) > 1}
        report = OracleReport(g, F, expected, set(actual))
        report.extra |= {f"{d} (visited twice)" for d in dupes}
        return report

    scan = None
    if g <= KUNZ_SCAN_CAP:
        vectors = oracle_kunz_exhaustive(g)
        scan_sgs = {GapSemigroup(tuple(x.support())) for x in vectors}
        if F is not None:
            scan_sgs = {S for S in scan_sgs if S.frobenius == F}
        scan = {S.canonical() for S in scan_sgs}
    return OracleReport(g, F, expected, set(actual), scan)
