"""Shared corpus and brute-force oracles.

The oracles never touch the package's dynamic programs: they enumerate
factorizations and multisets of generators directly.
"""

from functools import lru_cache
from itertools import combinations_with_replacement, product

import pytest

from deltanu import new_semigroup

# semigroups named alongside the periodicity examples
CORPUS = [
    (3, 10, 11),
    (3, 10, 14),
    (5, 12, 16),
    (4, 7, 9),
    (6, 8, 9, 11),
    (10, 13, 15),
    (4, 9, 10, 15),
]
SMALL = [(5, 9, 11), (3, 10, 14), (4, 7, 9), (6, 8, 9, 11), (3, 5), (4, 9, 10, 15)]


@pytest.fixture(params=CORPUS, ids=lambda g: ",".join(map(str, g)))
def corpus_semigroup(request):
    return new_semigroup(request.param)


@lru_cache(maxsize=None)
def brute_factorizations(gens, s):
    """Every x with sum x_i a_i == s, by a full nested loop."""
    ranges = [range(s // a + 1) for a in gens]
    return sorted(x for x in product(*ranges) if sum(c * a for c, a in zip(x, gens)) == s)


def brute_lengths(gens, s):
    return sorted({sum(x) for x in brute_factorizations(gens, s)})


def brute_contains(gens, s):
    if s < 0:
        return False
    if not gens:
        return s == 0
    a, rest = gens[0], gens[1:]
    return any(brute_contains(rest, s - k * a) for k in range(s // a + 1))


@lru_cache(maxsize=None)
def enum_lengths(gens, s):
    """Length set by splitting on the multiplicity of the first generator."""
    if len(gens) == 1:
        return frozenset([s // gens[0]]) if s % gens[0] == 0 else frozenset()
    a, rest = gens[0], gens[1:]
    return frozenset(k + l for k in range(s // a + 1) for l in enum_lengths(rest, s - k * a))


@lru_cache(maxsize=None)
def brute_w(gens, n):
    return frozenset(sum(c) for c in combinations_with_replacement(gens, n))


def brute_nu(gens, n):
    """Lengths m such that W(m) meets W(n), with W from multisets."""
    target = brute_w(gens, n)
    lo = -(-n * gens[0] // gens[-1])
    hi = n * gens[-1] // gens[0]
    return sorted(m for m in range(lo, hi + 1) if brute_w(gens, m) & target)


def brute_gaps(values):
    values = sorted(values)
    return tuple(sorted({b - a for a, b in zip(values, values[1:])}))
