"""Eventual periodicity of Delta-nu: the ``lcm(a1, ap)`` shift check and an
empirical search for the true minimal period and pre-period.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import BoundsProfile, EmbeddingDimensionTooSmall, compute_bounds
from .core import NumericalSemigroup, gaps_of
from .factorization import _nu_bits, bit_indices, iter_w_rows
from .fastdnu import DeltaNuRecord, decompose, delta_nu_record

__all__ = [
    "WindowTooSmall",
    "PeriodViolation",
    "PeriodReport",
    "lcm_period",
    "delta_nu_table",
    "verify_shift_invariance",
    "minimal_period_report",
]


class WindowTooSmall(ValueError):
    pass


class PeriodViolation(RuntimeError):
    """No divisor of ``lcm(a1, ap)`` is a period on the computed window."""


def lcm_period(S: NumericalSemigroup) -> int:
    return math.lcm(S.multiplicity, S.largest)


def _naive_prefix(S, stop, max_work=None):
    # n = 0 .. stop-1 reusing successive W rows
    out = []
    work = 0
    a1 = S.multiplicity
    rows = iter_w_rows(S)
    for n in range(stop):
        row = next(rows)
        if max_work is not None and work + row.sum() > max_work:
            break
        ws = [n * a1 + int(k) for k in row.nonzero()[0]]
        lengths = bit_indices(_nu_bits(S, ws))
        out.append(DeltaNuRecord(n, gaps_of(int(v) for v in lengths), "naive", len(ws)))
        work += len(ws)
    return out


def _records(S, lo, hi, method):
    return [delta_nu_record(S, n, method=method) for n in range(lo, hi)]


def delta_nu_table(S: NumericalSemigroup, n_max: int, method: str = "auto",
                   jobs: int = 1, max_work: int | None = None) -> list[DeltaNuRecord]:
    """Records for ``n = 0 .. n_max`` in order.

    ``max_work`` caps the total number of evaluated elements; when it is
    reached the table comes back shorter than requested.
    """
    if method == "naive" or (method == "auto" and S.p < 3):
        split = n_max + 1
    else:
        split = min(compute_bounds(S).N0, n_max + 1)
        method = "fast"
    if jobs > 1 and max_work is None:
        chunk = max(1, (n_max + 1) // (4 * jobs))
        bounds = [(lo, min(lo + chunk, n_max + 1)) for lo in range(0, n_max + 1, chunk)]
        m = "naive" if split > n_max else method
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_records, [S] * len(bounds), [b[0] for b in bounds],
                             [b[1] for b in bounds], [m] * len(bounds))
            return [r for part in parts for r in part]
    out = _naive_prefix(S, split, max_work)
    if len(out) < split:
        return out
    work = sum(r.evaluated_elements for r in out)
    for n in range(split, n_max + 1):
        rec = delta_nu_record(S, n, method=method)
        work += rec.evaluated_elements
        if max_work is not None and work > max_work:
            break
        out.append(rec)
    return out


def verify_shift_invariance(S: NumericalSemigroup, B: BoundsProfile | None = None,
                            cycles: int = 2) -> bool:
    """Check ``Delta-nu(n + lcm(a1, ap)) == Delta-nu(n)`` for ``n`` in ``[N0, N0 + cycles*lcm]``.

    Also checks that the gaps of the high zone repeat under ``n -> n + mu*a1``
    and those of the low zone under ``n -> n + mu*ap``, for ``mu`` in 1, 2.
    """
    if S.p < 3:
        raise EmbeddingDimensionTooSmall(f"{S} has embedding dimension {S.p}")
    if B is None:
        B = compute_bounds(S)
    delta = lcm_period(S)
    a1, ap = S.multiplicity, S.largest
    zones = {}

    def zone(n):
        if n not in zones:
            z = decompose(S, n, B)
            zones[n] = (gaps_of(z.B3), gaps_of(z.B1))
        return zones[n]

    def value(n):
        low, high = zone(n)
        return set(low) | {B.d} | set(high)

    for n in range(B.N0, B.N0 + cycles * delta + 1):
        if value(n) != value(n + delta):
            return False
        for mu in (1, 2):
            if zone(n)[1] != zone(n + mu * a1)[1] or zone(n)[0] != zone(n + mu * ap)[0]:
                return False
    return True


@dataclass
class PeriodReport:
    generators: tuple[int, ...]
    delta: int
    N0: int
    verified_upto: int
    theorem_holds: bool | None
    minimal_period: int | None
    minimal_preperiod: int | None
    residue_table: dict[int, tuple[int, ...]]
    empirical: bool = False
    truncated: bool = False
    values: list[tuple[int, ...]] = field(default_factory=list, repr=False, compare=False)

    @property
    def nonconstant_periodic_part(self) -> bool:
        return len(set(self.residue_table.values())) > 1

    @property
    def nonconstant(self) -> bool:
        # n = 0, 1 always give the empty set
        return len(set(self.values[2:])) > 1

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "delta": self.delta,
            "N0": self.N0,
            "minimal_period": self.minimal_period,
            "minimal_preperiod": self.minimal_preperiod,
            "residue_table": {str(r): list(v) for r, v in sorted(self.residue_table.items())},
            "theorem_holds": self.theorem_holds,
            "verified_upto": self.verified_upto,
            "empirical": self.empirical,
            "truncated": self.truncated,
            "nonconstant": self.nonconstant,
            "nonconstant_periodic_part": self.nonconstant_periodic_part,
        }


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def minimal_period_report(S: NumericalSemigroup, n_max: int | None = None, *,
                          allow_small_window: bool = False, method: str = "auto",
                          jobs: int = 1, max_work: int | None = None) -> PeriodReport:
    """Compute Delta-nu up to ``n_max`` and measure its eventual period.

    The period is searched among divisors of ``lcm(a1, ap)`` on the last
    ``2*lcm`` values; the pre-period is the least ``n0`` from which the
    final residue table reproduces every computed value.  For embedding
    dimension 2 no threshold is available, so the shift check covers only
    the top window and the report is flagged ``empirical``.  A report cut
    short by ``max_work`` is flagged ``truncated``; its ``theorem_holds``
    is ``None`` when no shift by ``lcm(a1, ap)`` past ``N0`` was checked.
    """
    delta = lcm_period(S)
    empirical = S.p < 3
    N0 = None if empirical else compute_bounds(S).N0
    if n_max is None:
        n_max = (N0 if N0 is not None else delta) + 3 * delta
    floor = 2 * delta if empirical else N0 + 2 * delta
    if n_max < floor and not allow_small_window:
        raise WindowTooSmall(f"n_max={n_max} < {floor} for {S}")

    records = delta_nu_table(S, n_max, method=method, jobs=jobs, max_work=max_work)
    values = [r.delta_nu for r in records]
    top = len(values) - 1
    truncated = top < n_max
    if empirical:
        N0 = max(0, top - 2 * delta)
    start = max(0, top - 2 * delta)

    def periodic(rho, lo):
        return all(values[n + rho] == values[n] for n in range(lo, top - rho + 1))

    theorem_holds = periodic(delta, N0) if top >= N0 + delta else None
    rho = next((r for r in _divisors(delta) if periodic(r, start)), None)
    if rho is None and truncated:
        return PeriodReport(
            generators=S.generators, delta=delta, N0=N0, verified_upto=top,
            theorem_holds=theorem_holds, minimal_period=None, minimal_preperiod=None,
            residue_table={}, empirical=empirical, truncated=True, values=values,
        )
    if rho is None:
        raise PeriodViolation(f"no divisor of {delta} is a period of Delta-nu for {S} on [{start}, {top}]")
    n0 = top - rho + 1
    while n0 > 0 and values[n0 - 1] == values[n0 - 1 + rho]:
        n0 -= 1
    n0 = min(n0, top)
    table = {n % rho: values[n] for n in range(max(0, top - rho + 1), top + 1)}
    return PeriodReport(
        generators=S.generators, delta=delta, N0=N0, verified_upto=top,
        theorem_holds=theorem_holds, minimal_period=rho, minimal_preperiod=n0,
        residue_table=table, empirical=empirical, truncated=truncated, values=values,
    )
