"""Apery sets, Frobenius number, genus, and their analytic bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mu import MuTable
from .semigroup import (
    EXCEPTIONAL_PAIRS,
    QuadraticSemigroup,
    membership_bound,
    mu_ab_closed,
    require_nontrivial,
    shared_membership,
)

__all__ = [
    "AperySet",
    "InvariantSummary",
    "apery_closed",
    "apery_oracle",
    "bounds_certified",
    "frobenius",
    "frobenius_bounds",
    "frobenius_oracle",
    "genus",
    "genus_bounds",
    "genus_oracle",
    "invariant_summary",
]


@dataclass(frozen=True)
class AperySet:
    """Least member of S in each residue class mod `modulus`.

    elements[k] is congruent to k and is the smallest such member; its
    predecessor elements[k] - modulus is outside S (except for k = 0,
    where the element is 0 itself).
    """

    modulus: int
    elements: tuple[int, ...]


def apery_closed(s: QuadraticSemigroup, table: MuTable | None = None) -> AperySet:
    """Apery set with respect to a, assembled from the closed lift values.

    The element in the class of n*b mod a is mu_{a,b}(n)*a + n*b; as n
    runs over 0..a-1 the classes are hit exactly once since gcd(a,b) = 1.
    """
    require_nontrivial(s)
    a, b = s.a, s.b
    elements = [0] * a
    for n in range(a):
        elements[(n * b) % a] = mu_ab_closed(s, n, table) * a + n * b
    return AperySet(modulus=a, elements=tuple(elements))


def apery_oracle(s: QuadraticSemigroup) -> AperySet:
    """Apery set by scanning the membership table, one residue class at a time."""
    if s.trivial:
        if s.a == 1:
            return AperySet(modulus=1, elements=(0,))
        raise ValueError("Apery set needs a positive modulus a")
    a = s.a
    reach = shared_membership(s).reachable
    elements = []
    for r in range(a):
        hits = np.flatnonzero(reach[r::a])
        elements.append(r + a * int(hits[0]))
    return AperySet(modulus=a, elements=tuple(elements))


def frobenius(s: QuadraticSemigroup, table: MuTable | None = None) -> int:
    """Largest integer outside S; -1 when S is everything (trivial case)."""
    if s.trivial:
        return -1
    return max(apery_closed(s, table).elements) - s.a


def frobenius_oracle(s: QuadraticSemigroup) -> int:
    if s.trivial:
        return -1
    return max(apery_oracle(s).elements) - s.a


def genus(s: QuadraticSemigroup, table: MuTable | None = None) -> int:
    """Number of gaps, via the integer lift-sum formula.

    g = sum of mu_{a,b}(n) over 0 <= n < a, plus (a-1)(b-1)/2.  The
    division is exact: a and b cannot both be even (they are coprime), so
    a-1 or b-1 is even.
    """
    if s.trivial:
        return 0
    a, b = s.a, s.b
    lift_sum = sum(mu_ab_closed(s, n, table) for n in range(a))
    return lift_sum + (a - 1) * (b - 1) // 2


def genus_oracle(s: QuadraticSemigroup) -> int:
    """Count the gaps directly off the membership table."""
    if s.trivial:
        return 0
    f = frobenius_oracle(s)
    reach = shared_membership(s, f + 1).reachable
    return int(np.count_nonzero(~reach[: f + 1]))


def frobenius_bounds(a: int, b: int) -> tuple[float, float]:
    """Closed sandwich for the Frobenius number of S(a,b).

    Certified for nontrivial pairs outside the eight exceptional ones;
    see bounds_certified.
    """
    if a < 2 or b < 1:
        raise ValueError("bounds need a >= 2 and b >= 1")
    low = a / 2.0 * (1.0 + math.sqrt(8.0 * a - 7.0)) + a * b - a - b
    high = a / 2.0 * (3.0 + math.sqrt(24.0 * a - 15.0)) + a * b - a - b
    return (low, high)


def genus_bounds(a: int, b: int) -> tuple[float, float]:
    """Closed sandwich for the genus of S(a,b); same certification caveat."""
    if a < 2 or b < 1:
        raise ValueError("bounds need a >= 2 and b >= 1")
    shift = (a - 1) * (b - 1) / 2.0
    low = ((8.0 * a - 7.0) ** 1.5 + 12.0 * a - 13.0) / 24.0 + shift
    high = (
        math.sqrt(3.0) * (8.0 * a + 3.0) ** 1.5 + 36.0 * a - 36.0 - 11.0 * math.sqrt(33.0)
    ) / 24.0 + shift
    return (low, high)


def bounds_certified(a: int, b: int) -> bool:
    """Whether the two-sided bounds are guaranteed to hold for (a,b)."""
    if a < 2 or b < 1:
        return False
    return (a, b) not in EXCEPTIONAL_PAIRS


@dataclass(frozen=True)
class InvariantSummary:
    a: int
    b: int
    frobenius: int
    genus: int
    frobenius_low: float
    frobenius_high: float
    genus_low: float
    genus_high: float
    bounds_certified: bool


def invariant_summary(s: QuadraticSemigroup, table: MuTable | None = None) -> InvariantSummary:
    """Everything at once for one nontrivial semigroup."""
    require_nontrivial(s)
    f_low, f_high = frobenius_bounds(s.a, s.b)
    g_low, g_high = genus_bounds(s.a, s.b)
    return InvariantSummary(
        a=s.a,
        b=s.b,
        frobenius=frobenius(s, table),
        genus=genus(s, table),
        frobenius_low=f_low,
        frobenius_high=f_high,
        genus_low=g_low,
        genus_high=g_high,
        bounds_certified=bounds_certified(s.a, s.b),
    )
