"""Windowed Delta-nu: only elements of ``W(n)`` close to ``n*a1`` or ``n*ap``
need their length sets; everything in between contributes the gap ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bounds import BoundsProfile, EmbeddingDimensionTooSmall, compute_bounds
from .core import NumericalSemigroup, gaps_of
from .factorization import _nu_bits, bit_indices, length_table, w_set

__all__ = [
    "BelowN0",
    "ZoneDecomposition",
    "DeltaNuRecord",
    "window_w_set",
    "decompose",
    "delta_nu_fast",
    "delta_nu_record",
]


class BelowN0(ValueError):
    pass


@dataclass(frozen=True)
class ZoneDecomposition:
    n: int
    x1: int
    x2: int
    W3: tuple[int, ...]
    W1: tuple[int, ...]
    B3: tuple[int, ...]
    B1: tuple[int, ...]

    @property
    def evaluated_elements(self) -> int:
        return len(self.W3) + len(self.W1)


@dataclass(frozen=True)
class DeltaNuRecord:
    n: int
    delta_nu: tuple[int, ...]
    method: str
    evaluated_elements: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "delta_nu": list(self.delta_nu),
            "evaluated_elements": self.evaluated_elements,
        }


@lru_cache(maxsize=512)
def _min_counts(steps: tuple[int, ...], width: int) -> tuple[np.ndarray, np.ndarray]:
    # reachable offsets in [0, width] and the fewest steps summing to each
    big = width + 1
    best = [0] + [big] * width
    for o in range(1, width + 1):
        best[o] = min((best[o - t] for t in steps if t <= o), default=big) + 1
    best = np.array(best)
    reach = np.flatnonzero(best <= width)
    return reach, best[reach]


def window_w_set(S: NumericalSemigroup, n: int, lo: int, hi: int) -> tuple[int, ...]:
    """``W(n)`` intersected with ``[lo, hi]``, without building ``W(n)``.

    Elements near the bottom are ``n*a1 + sum y_i (a_i - a1)`` and elements
    near the top are ``n*ap - sum y_i (ap - a_i)``, each with at most ``n``
    summands.  Whichever end ``[lo, hi]`` is closer to is used, so the cost
    depends only on the window width.
    """
    a = S.generators
    bottom, top = n * a[0], n * a[-1]
    lo, hi = max(lo, bottom), min(hi, top)
    if lo > hi:
        return ()
    if hi - bottom <= top - lo:
        offsets, counts = _min_counts(tuple(x - a[0] for x in a[1:]), hi - bottom)
        keep = offsets[(counts <= n) & (offsets >= lo - bottom)]
        return tuple((bottom + keep).tolist())
    offsets, counts = _min_counts(tuple(a[-1] - x for x in a[:-1]), top - lo)
    keep = offsets[(counts <= n) & (offsets >= top - hi)]
    return tuple((top - keep[::-1]).tolist())


def decompose(S: NumericalSemigroup, n: int, B: BoundsProfile | None = None) -> ZoneDecomposition:
    """Low and high windows of ``W(n)`` and the lengths they contribute."""
    if B is None:
        B = compute_bounds(S)
    if n < B.N0:
        raise BelowN0(f"n={n} is below N0={B.N0}")
    a1, ap = S.multiplicity, S.largest
    x1 = n * a1 + B.lambda1_ceil
    x2 = n * ap - B.lambda2_floor
    W3 = window_w_set(S, n, n * a1, x1)
    W1 = window_w_set(S, n, x2, n * ap)
    # keep l <= x1/ap and l >= x2/a1
    low_cut = x1 // ap + 1
    high_cut = -(-x2 // a1)
    low = _nu_bits(S, W3) & ((1 << low_cut) - 1)
    high = _nu_bits(S, W1) >> high_cut
    B3 = tuple(int(l) for l in bit_indices(low))
    B1 = tuple(high_cut + int(l) for l in bit_indices(high))
    return ZoneDecomposition(n=n, x1=x1, x2=x2, W3=W3, W1=W1, B3=B3, B1=B1)


def _naive_record(S: NumericalSemigroup, n: int) -> DeltaNuRecord:
    ws = w_set(S, n)
    lengths = bit_indices(_nu_bits(S, ws))
    return DeltaNuRecord(n, gaps_of(int(v) for v in lengths), "naive", len(ws))


def delta_nu_record(S: NumericalSemigroup, n: int, B: BoundsProfile | None = None,
                    method: str = "auto") -> DeltaNuRecord:
    """Delta-nu of ``n`` together with the method used and its work count.

    ``method`` is ``"naive"``, ``"fast"`` or ``"auto"``.  The fast method
    falls back to the naive one below ``N0``; ``"auto"`` is the fast method
    when the embedding dimension allows it and the naive one otherwise.
    """
    if method == "naive" or (method == "auto" and S.p < 3):
        return _naive_record(S, n)
    if method not in ("fast", "auto"):
        raise ValueError(f"unknown method {method!r}")
    if B is None:
        B = compute_bounds(S)
    if n < B.N0:
        return _naive_record(S, n)
    z = decompose(S, n, B)
    value = set(gaps_of(z.B3)) | {B.d} | set(gaps_of(z.B1))
    return DeltaNuRecord(n, tuple(sorted(value)), "fast", z.evaluated_elements)


def delta_nu_fast(S: NumericalSemigroup, n: int, B: BoundsProfile | None = None) -> tuple[int, ...]:
    """Delta-nu of ``n`` from the two windows of ``W(n)`` (naive below ``N0``)."""
    if S.p < 3:
        raise EmbeddingDimensionTooSmall(f"{S} has embedding dimension {S.p}")
    return delta_nu_record(S, n, B, method="fast").delta_nu
