"""Command-line interface: ``semiforest {count,list,irreducible,verify,bench}``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, TextIO

from .elementary import InfeasibleError, feasible
from .forest import (
    default_workers,
    enumerate_FG,
    enumerate_frobenius,
    enumerate_genus,
    frobenius_range,
    theta_bits,
)
from .irreducible import enumerate_irreducible
from .kunz import KunzVector, kunz_from_semigroup
from .oracle import GENUS_TREE_CAP, verify
from .semigroup import GENUS_CAP, GapSemigroup, minimal_generators

FORMATS = ("gens", "gaps", "kunz", "json-lines")
COMMANDS = ("count", "list", "irreducible", "verify", "bench")


@dataclass
class EnumerationRequest:
    command: str
    g: Optional[int] = None
    F: Optional[int] = None
    format: str = "gens"
    sorted: bool = False
    threads: int = 1
    output: Optional[str] = None
    key_values: bool = False


class UsageError(Exception):
    pass


def format_record(x: KunzVector, F: int, fmt: str) -> str:
    gaps = x.support()
    if fmt == "kunz":
        return x.text()
    if fmt == "gaps":
        return ",".join(map(str, gaps))
    gens = minimal_generators(GapSemigroup(tuple(gaps)))
    if fmt == "gens":
        return ",".join(map(str, gens))
    root = KunzVector(x.genus, theta_bits(x.bits, F))
    return json.dumps({
        "genus": x.genus,
        "frobenius": F,
        "multiplicity": next(i for i in range(1, x.length + 2) if i not in set(gaps)),
        "gens": gens,
        "gaps": gaps,
        "kunz": x.text(),
        "elementary-root": root.text(),
    })


def _validate(req: EnumerationRequest) -> None:
    if req.command not in COMMANDS:
        raise UsageError(f"unknown command {req.command!r}")
    if req.format not in FORMATS:
        raise UsageError(f"unknown format {req.format!r}")
    if req.threads < 1:
        raise UsageError("--threads must be a positive integer")
    for name, v in (("--genus", req.g), ("--frobenius", req.F)):
        if v is not None and v < 1:
            raise UsageError(f"{name} must be a positive integer")
    if req.g is not None and req.g > GENUS_CAP:
        raise UsageError(f"--genus is capped at {GENUS_CAP}")
    if req.command == "irreducible":
        if req.F is None:
            raise UsageError("irreducible requires --frobenius")
        return
    if req.command in ("verify", "bench") and req.g is None:
        raise UsageError(f"{req.command} requires --genus")
    if req.g is None and req.F is None:
        raise UsageError(f"{req.command} requires --genus and/or --frobenius")
    if req.g is not None and req.F is not None and not feasible(req.F, req.g):
        raise UsageError(f"no semigroup has Frobenius number {req.F} and genus {req.g} "
                         f"(need g <= F <= 2g - 1)")
    if req.command == "verify" and req.g > GENUS_TREE_CAP:
        raise UsageError(f"verify is limited to genus <= {GENUS_TREE_CAP}")


def _enumerate(req: EnumerationRequest, visitor) -> int:
    if req.g is not None and req.F is not None:
        return enumerate_FG(req.F, req.g, visitor, workers=req.threads)
    if req.g is not None:
        return enumerate_genus(req.g, visitor, workers=req.threads)
    return enumerate_frobenius(req.F, visitor, workers=req.threads)


def _list(req: EnumerationRequest, out: TextIO) -> int:
    if req.sorted:
        buf: list[tuple[str, str]] = []
        _enumerate(req, lambda x, F, g: buf.append((x.text(), format_record(x, F, req.format))))
        buf.sort()
        for _, rec in buf:
            out.write(rec + "\n")
    else:
        _enumerate(req, lambda x, F, g: out.write(format_record(x, F, req.format) + "\n"))
    return 0


def _irreducible(req: EnumerationRequest, out: TextIO) -> int:
    records: list[tuple[str, str]] = []

    def visit(c):
        x = kunz_from_semigroup(c.semigroup)
        records.append((x.text(), f"{format_record(x, req.F, req.format)}\t{c.kind}"))

    enumerate_irreducible(req.F, visit)
    if req.sorted:
        records.sort()
    for _, rec in records:
        out.write(rec + "\n")
    return 0


def _bench(req: EnumerationRequest, out: TextIO) -> int:
    out.write("frobenius,count,seconds\n")
    total = 0
    t_all = time.perf_counter()
    for F in frobenius_range(req.g):
        t0 = time.perf_counter()
        n = enumerate_FG(F, req.g, workers=req.threads)
        total += n
        out.write(f"{F},{n},{time.perf_counter() - t0:.6f}\n")
    out.write(f"total,{total},{time.perf_counter() - t_all:.6f}\n")
    return 0


def _verify(req: EnumerationRequest, out: TextIO) -> int:
    report = verify(req.g, req.F, workers=req.threads)
    out.write((report.render_kv() if req.key_values else report.render_text()) + "\n")
    return 0 if report.passed else 1


def run(req: EnumerationRequest, out: Optional[TextIO] = None, err: TextIO = sys.stderr) -> int:
    try:
        _validate(req)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    close = False
    if out is None:
        if req.output:
            out = open(req.output, "w", encoding="utf-8")
            close = True
        else:
            out = sys.stdout
    try:
        if req.command == "count":
            out.write(f"{_enumerate(req, None)}\n")
            return 0
        if req.command == "list":
            return _list(req, out)
        if req.command == "irreducible":
            return _irreducible(req, out)
        if req.command == "bench":
            return _bench(req, out)
        return _verify(req, out)
    except InfeasibleError as e:
        err.write(f"usage error: {e}\n")
        return 2
    finally:
        if close:
            out.close()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiforest",
        description="Enumerate numerical semigroups by genus and Frobenius number.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, genus=True, frobenius=True):
        if genus:
            p.add_argument("--genus", "-g", type=int, dest="g")
        if frobenius:
            p.add_argument("--frobenius", "-F", type=int, dest="F")
        p.add_argument("--threads", "-j", type=int, default=default_workers(),
                       help="worker processes (default: $SEMIFOREST_THREADS or 1)")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    common(sub.add_parser("count", help="print |Sem(g)|, |Sem(F, g)| or the number with Frobenius number F"))
    p = sub.add_parser("list", help="print one record per semigroup")
    common(p)
    p.add_argument("--format", choices=FORMATS, default="gens")
    p.add_argument("--sorted", action="store_true", help="sort records by Kunz vector text")
    p = sub.add_parser("irreducible", help="irreducible semigroups with Frobenius number F")
    common(p, genus=False)
    p.add_argument("--format", choices=FORMATS, default="gens")
    p.add_argument("--sorted", action="store_true")
    p = sub.add_parser("verify", help="check the engine against brute-force oracles")
    common(p)
    p.add_argument("--kv", action="store_true", dest="key_values", help="key=value output for CI")
    p = sub.add_parser("bench", help="per-Frobenius counts and timings as CSV")
    common(p, frobenius=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    req = EnumerationRequest(**{k: v for k, v in vars(args).items()
                                if k in EnumerationRequest.__dataclass_fields__})
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
