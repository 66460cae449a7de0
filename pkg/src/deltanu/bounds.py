"""Closed-form thresholds for the windowed Delta-nu computation.

Everything is evaluated in exact rational arithmetic; only the final
threshold ``N0`` is rounded (up).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .core import NumericalSemigroup, SemigroupError
from .factorization import Factorization

__all__ = [
    "EmbeddingDimensionTooSmall",
    "BelowBound",
    "BoundsProfile",
    "compute_d",
    "compute_bounds",
    "zone_classify",
    "ceil_fraction",
    "floor_fraction",
]


class EmbeddingDimensionTooSmall(SemigroupError):
    pass


class BelowBound(ValueError):
    pass


def ceil_fraction(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def floor_fraction(q: Fraction) -> int:
    return q.numerator // q.denominator


def compute_d(S: NumericalSemigroup) -> int:
    """gcd of the consecutive differences of the generators."""
    a = S.generators
    return reduce(math.gcd, (b - c for c, b in zip(a, a[1:])))


@dataclass(frozen=True)
class BoundsProfile:
    d: int
    g: tuple[int, ...]
    S_lower: tuple[Fraction, ...]
    S_upper: tuple[Fraction, ...]
    NS: int
    Lw: Fraction
    Lwp: Fraction
    C1: Fraction
    C2: Fraction
    C3: Fraction
    C4: Fraction
    lambda1: Fraction
    lambda2: Fraction
    N0_terms: tuple[Fraction, Fraction]
    N0: int

    @property
    def lambda1_ceil(self) -> int:
        return ceil_fraction(self.lambda1)

    @property
    def lambda2_floor(self) -> int:
        return floor_fraction(self.lambda2)

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return {"num": v.numerator, "den": v.denominator}
            if isinstance(v, tuple):
                return [enc(x) for x in v]
            return v

        return {k: enc(v) for k, v in asdict(self).items()}


@lru_cache(maxsize=256)
def compute_bounds(S: NumericalSemigroup) -> BoundsProfile:
    """All thresholds for ``S``; requires embedding dimension at least 3."""
    if S.p < 3:
        raise EmbeddingDimensionTooSmall(f"{S} has embedding dimension {S.p}; need p >= 3")
    a = S.generators
    p = S.p
    a1, a2, aq, ap = a[0], a[1], a[-2], a[-1]
    d = compute_d(S)

    g, lower, upper = [], [], []
    for ai in a[1:-1]:
        gi = math.gcd(math.gcd(ai - a1, a1 - ap), ap - ai)
        g.append(gi)
        lower.append(Fraction(-a2 * (a1 * d * gi + (p - 2) * (a1 - ai) * (a1 - ap)), (a1 - a2) * gi))
        upper.append(Fraction(aq * ((p - 2) * (a1 - ap) * (ap - ai) - d * ap * gi), (aq - ap) * gi))
    NS = ceil_fraction(max(lower + upper))

    Lw = Fraction((a1 - a2) * NS, a1 * a2)
    Lwp = Fraction((ap - aq) * NS, ap * aq)
    C1 = Fraction((ap - aq) * NS, aq)
    C2 = Fraction((a1 - a2) * NS, a2)
    C3 = (-Fraction(ap, a1) + Fraction(ap, a2) - Fraction(ap, aq) + 1) * NS
    C4 = (Fraction(a1, aq) - Fraction(a1, ap) - Fraction(a1, a2) + 1) * NS
    lambda1 = max(C1, C4)
    lambda2 = -min(C2, C3)
    N0_terms = (Fraction(NS, a1), (ap - a1 + lambda1 + lambda2) / (ap - a1))
    N0 = ceil_fraction(max(N0_terms))

    return BoundsProfile(
        d=d, g=tuple(g), S_lower=tuple(lower), S_upper=tuple(upper), NS=NS,
        Lw=Lw, Lwp=Lwp, C1=C1, C2=C2, C3=C3, C4=C4,
        lambda1=lambda1, lambda2=lambda2, N0_terms=N0_terms, N0=N0,
    )


def zone_classify(S: NumericalSemigroup, s: int, x: Factorization,
                  B: BoundsProfile | None = None) -> frozenset[str]:
    """Which of the zones ``Z1``, ``Z2``, ``Z3`` the factorization ``x`` of ``s`` lies in.

    Purely diagnostic: the zones are intervals of lengths relative to
    ``s/a1`` (top) and ``s/ap`` (bottom).
    """
    if B is None:
        B = compute_bounds(S)
    if s < B.NS:
        raise BelowBound(f"s={s} is below N_S={B.NS}")
    a1, ap = S.multiplicity, S.largest
    top = Fraction(s, a1)
    bottom = Fraction(s, ap)
    L = x.length
    zones = set()
    if top + B.Lw < L <= top:
        zones.add("Z1")
    if bottom + B.Lwp - B.d <= L <= top + B.Lw + B.d:
        zones.add("Z2")
    if bottom <= L < bottom + B.Lwp:
        zones.add("Z3")
    return frozenset(zones)
