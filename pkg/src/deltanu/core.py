"""Numerical semigroup values, membership and the gap primitive.

A semigroup is always held in canonical form: its minimal system of
generators, sorted, with gcd 1.  Exact rationals are plain
:class:`fractions.Fraction` values throughout the package.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Rational",
    "SemigroupError",
    "NotPrimitive",
    "Degenerate",
    "NumericalSemigroup",
    "new_semigroup",
    "parse_generators",
    "contains",
    "apery_set",
    "gaps_of",
]

Rational = Fraction


class SemigroupError(ValueError):
    """Base class for invalid semigroup input."""


class NotPrimitive(SemigroupError):
    pass


class Degenerate(SemigroupError):
    pass


def _minimal_subsystem(gens: Sequence[int]) -> list[int]:
    # a generator can only be a combination of smaller ones
    top = gens[-1]
    reach = np.zeros(top + 1, dtype=bool)
    reach[0] = True
    kept = []
    for g in gens:
        if reach[g]:
            continue
        kept.append(g)
        for lo in range(g, top + 1, g):
            hi = min(lo + g, top + 1)
            reach[lo:hi] |= reach[lo - g:hi - g]
    return kept


@dataclass(frozen=True)
class NumericalSemigroup:
    """A primitive numerical semigroup given by its minimal generators.

    Use :func:`new_semigroup` to build one from arbitrary input; the
    constructor only accepts a system that is already canonical.
    """

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(a) for a in self.generators)
        object.__setattr__(self, "generators", gens)
        if len(gens) < 2:
            raise Degenerate(f"need at least two minimal generators, got {gens}")
        if gens[0] < 1 or any(b <= a for a, b in zip(gens, gens[1:])):
            raise SemigroupError(f"generators must be positive and strictly increasing: {gens}")
        if reduce(gcd, gens) != 1:
            raise NotPrimitive(f"gcd of {gens} is not 1")
        if _minimal_subsystem(gens) != list(gens):
            raise SemigroupError(f"{gens} is not a minimal generating system")

    @property
    def p(self) -> int:
        """Embedding dimension."""
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def largest(self) -> int:
        return self.generators[-1]

    def __contains__(self, s: int) -> bool:
        return contains(self, s)

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def new_semigroup(raw_generators: Iterable[int]) -> NumericalSemigroup:
    """Canonical semigroup generated by ``raw_generators``.

    Duplicates and generators that are combinations of the others are
    dropped silently.  Raises :class:`NotPrimitive` when the gcd is not 1
    and :class:`Degenerate` when fewer than two minimal generators remain.
    """
    gens = sorted({int(a) for a in raw_generators})
    if not gens:
        raise SemigroupError("no generators given")
    if gens[0] < 1:
        raise SemigroupError("generators must be positive")
    if reduce(gcd, gens) != 1:
        raise NotPrimitive(f"gcd of {gens} is {reduce(gcd, gens)}")
    kept = _minimal_subsystem(gens)
    if len(kept) < 2:
        raise Degenerate(f"{gens} reduces to the trivial semigroup <1>")
    return NumericalSemigroup(tuple(kept))


def parse_generators(text: str) -> NumericalSemigroup:
    """Parse ``"4, 9,10,15"`` into a canonical semigroup."""
    parts = [t.strip() for t in text.split(",")]
    try:
        values = [int(t) for t in parts if t]
    except ValueError:
        raise SemigroupError(f"cannot parse generator list {text!r}") from None
    return new_semigroup(values)


@lru_cache(maxsize=256)
def apery_set(S: NumericalSemigroup) -> tuple[int, ...]:
    """Smallest element of ``S`` in each residue class modulo the multiplicity."""
    m = S.multiplicity
    best = [None] * m
    best[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w > best[r]:
            continue
        for a in S.generators[1:]:
            v = w + a
            rv = v % m
            if best[rv] is None or v < best[rv]:
                best[rv] = v
                heapq.heappush(heap, (v, rv))
    return tuple(best)


def contains(S: NumericalSemigroup, s: int) -> bool:
    """Whether ``s`` is a nonnegative integer combination of the generators."""
    if s < 0:
        return False
    return s >= apery_set(S)[s % S.multiplicity]


def gaps_of(values: Iterable[int]) -> tuple[int, ...]:
    """Sorted distinct successive differences of a strictly increasing sequence."""
    values = list(values)
    return tuple(sorted({b - a for a, b in zip(values, values[1:])}))
