"""Walk the tree of numerical semigroups by genus and report on each one."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .core import NumericalSemigroup
from .periodicity import PeriodReport, minimal_period_report

__all__ = [
    "GENUS_CEILING",
    "ScanFilter",
    "ScanEntry",
    "is_generalized_arithmetic",
    "semigroups_by_genus",
    "genus_tree_scan",
    "budget_work",
]

GENUS_CEILING = 30
# evaluated elements per budget millisecond; fixed so that truncation
# does not depend on machine speed or worker count
WORK_PER_MS = 5000
DEFAULT_BUDGET_MS = 2000


@dataclass(frozen=True)
class ScanFilter:
    max_genus: int
    skip_generalized_arithmetic: bool = True
    require_nonconstant: bool = False
    ceiling: int = GENUS_CEILING

    def __post_init__(self):
        if not 1 <= self.max_genus <= self.ceiling:
            raise ValueError(f"max_genus must lie in [1, {self.ceiling}], got {self.max_genus}")


@dataclass(frozen=True)
class ScanEntry:
    genus: int
    generators: tuple[int, ...]
    report: PeriodReport | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        out = {"genus": self.genus, "generators": list(self.generators)}
        if self.report is not None:
            out.update(self.report.to_dict())
        if self.error is not None:
            out["error"] = self.error
        return out


def is_generalized_arithmetic(S: NumericalSemigroup) -> bool:
    """Whether the minimal generators are ``m, m+k, ..., m+qk``."""
    a = S.generators
    return len({b - c for c, b in zip(a, a[1:])}) == 1


def _minimal_generators(gaps: frozenset[int], frob: int) -> tuple[int, ...]:
    m = next(x for x in range(1, frob + 2) if x not in gaps)
    top = frob + m
    member = [x not in gaps for x in range(top + 1)]
    gens = []
    for x in range(1, top + 1):
        if member[x] and not any(member[y] and member[x - y] for y in range(1, x // 2 + 1)):
            gens.append(x)
    return tuple(gens)


def semigroups_by_genus(max_genus: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(genus, minimal generators)`` for every semigroup of genus 1..max_genus.

    Children of a node drop one minimal generator larger than the
    Frobenius number, so every semigroup is produced exactly once.
    """
    level = [(frozenset(), -1, (1,))]
    for genus in range(1, max_genus + 1):
        nxt = []
        for gaps, frob, gens in level:
            for g in gens:
                if g > frob:
                    child = gaps | {g}
                    nxt.append((child, g, _minimal_generators(child, g)))
        nxt.sort(key=lambda t: t[2])
        for _, _, gens in nxt:
            yield genus, gens
        level = nxt


def budget_work(ms: int | None = None) -> int:
    """Per-semigroup work cap from ``ms`` or ``DELTANU_BUDGET_MS``."""
    if ms is None:
        ms = int(os.environ.get("DELTANU_BUDGET_MS") or DEFAULT_BUDGET_MS)
    return ms * WORK_PER_MS


def _scan_one(genus, gens, max_work):
    try:
        report = minimal_period_report(NumericalSemigroup(gens), max_work=max_work,
                                       allow_small_window=True)
        return ScanEntry(genus, gens, report=report)
    except Exception as exc:  # reported in-stream
        return ScanEntry(genus, gens, error=f"{type(exc).__name__}: {exc}")


def genus_tree_scan(flt: ScanFilter, jobs: int = 1,
                    max_work: int | None = None) -> Iterator[ScanEntry]:
    """Period reports for the semigroups of genus up to ``flt.max_genus``.

    Output is ordered by genus, then generators, whatever ``jobs`` is.
    ``max_work`` caps the evaluated elements per semigroup (default from
    :func:`budget_work`); over-budget reports carry ``truncated=True``.
    """
    if max_work is None:
        max_work = budget_work()
    todo = [(g, gens) for g, gens in semigroups_by_genus(flt.max_genus)
            if not (flt.skip_generalized_arithmetic and is_generalized_arithmetic(NumericalSemigroup(gens)))]
    genera = [t[0] for t in todo]
    gens = [t[1] for t in todo]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_scan_one, genera, gens, [max_work] * len(todo), chunksize=4))
    else:
        entries = map(_scan_one, genera, gens, [max_work] * len(todo))
    for entry in entries:
        if flt.require_nonconstant and entry.report is not None and not entry.report.nonconstant_periodic_part:
            continue
        yield entry
