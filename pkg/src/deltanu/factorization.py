"""Factorizations, length sets and the straightforward Delta-nu computation.

Length sets come from a per-value table of reachable lengths stored as
Python integers used as bitsets (bit ``l`` of entry ``v`` is set when
``v`` has a factorization of length ``l``).  Explicit enumeration of
factorizations is kept for small inputs and as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from operator import or_
from typing import Iterator

import numpy as np

from .core import NumericalSemigroup, gaps_of

__all__ = [
    "Factorization",
    "LengthSet",
    "factorizations",
    "length_set",
    "delta_of_element",
    "w_set",
    "iter_w_rows",
    "nu",
    "delta_nu_naive",
    "bit_indices",
]


@dataclass(frozen=True, order=True)
class Factorization:
    coordinates: tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(self.coordinates))
        object.__setattr__(self, "length", sum(self.coordinates))

    def value(self, S: NumericalSemigroup) -> int:
        return sum(x * a for x, a in zip(self.coordinates, S.generators))


@dataclass(frozen=True)
class LengthSet:
    element: int
    lengths: tuple[int, ...]

    def __bool__(self):
        return bool(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self):
        return len(self.lengths)


def bit_indices(x: int) -> np.ndarray:
    """Positions of the set bits of a nonnegative integer, ascending."""
    if x == 0:
        return np.empty(0, dtype=np.int64)
    raw = np.frombuffer(x.to_bytes((x.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little"))


def factorizations(S: NumericalSemigroup, s: int) -> list[Factorization]:
    """All of ``Z(s)``, lexicographically descending in ``x1``, then ``x2``, ..."""
    gens = S.generators
    out = []

    def walk(i, rest, prefix):
        a = gens[i]
        if i == len(gens) - 1:
            if rest % a == 0:
                out.append(Factorization(prefix + (rest // a,)))
            return
        for x in range(rest // a, -1, -1):
            walk(i + 1, rest - x * a, prefix + (x,))

    if s >= 0:
        walk(0, s, ())
    return out


class LengthTable:
    """Growable table of length bitsets indexed by semigroup element."""

    def __init__(self, S: NumericalSemigroup):
        self.S = S
        self.bits = [1]

    def extend(self, upto: int) -> None:
        bits = self.bits
        gens = self.S.generators
        for v in range(len(bits), upto + 1):
            acc = 0
            for a in gens:
                if a > v:
                    break
                acc |= bits[v - a]
            bits.append(acc << 1)

    def __getitem__(self, s: int) -> int:
        if s >= len(self.bits):
            self.extend(s)
        return self.bits[s]


@lru_cache(maxsize=8)
def length_table(S: NumericalSemigroup) -> LengthTable:
    return LengthTable(S)


def length_set(S: NumericalSemigroup, s: int) -> LengthSet:
    """Set of lengths of factorizations of ``s`` (empty when ``s`` is not in ``S``)."""
    if s < 0:
        return LengthSet(s, ())
    return LengthSet(s, tuple(int(v) for v in bit_indices(length_table(S)[s])))


def delta_of_element(S: NumericalSemigroup, s: int) -> tuple[int, ...]:
    return gaps_of(length_set(S, s).lengths)


def iter_w_rows(S: NumericalSemigroup) -> Iterator[np.ndarray]:
    """Yield ``W(0), W(1), ...`` as boolean rows offset by ``n*a1``.

    Entry ``k`` of row ``n`` says whether ``n*a1 + k`` has a factorization
    of length exactly ``n``.
    """
    steps = [a - S.multiplicity for a in S.generators]
    width = steps[-1]
    row = np.ones(1, dtype=bool)
    while True:
        yield row
        nxt = np.zeros(row.size + width, dtype=bool)
        for st in steps:
            nxt[st:st + row.size] |= row
        row = nxt


def w_set(S: NumericalSemigroup, n: int) -> tuple[int, ...]:
    """Elements of ``S`` having a factorization of length exactly ``n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    rows = iter_w_rows(S)
    for _ in range(n):
        next(rows)
    row = next(rows)
    base = n * S.multiplicity
    return tuple(int(base + k) for k in np.flatnonzero(row))


def _nu_bits(S: NumericalSemigroup, elements) -> int:
    table = length_table(S)
    if len(elements):
        table.extend(int(max(elements)))
    bits = table.bits
    return reduce(or_, (bits[s] for s in elements), 0)


def nu(S: NumericalSemigroup, n: int) -> tuple[int, ...]:
    """Union of the length sets of all elements of ``W(n)``."""
    return tuple(int(v) for v in bit_indices(_nu_bits(S, w_set(S, n))))


def delta_nu_naive(S: NumericalSemigroup, n: int) -> tuple[int, ...]:
    """Delta-nu of ``n`` by taking lengths of every element of ``W(n)``."""
    return gaps_of(nu(S, n))
