"""Numerical semigroups generated by a quadratic sequence.

S(a,b) is generated by y_n = n*a + C(n,2)*b for n >= 0.  It is a
numerical semigroup (cofinite in the nonnegative integers) exactly when
gcd(a,b) = 1, and collapses to all of them when a <= 1 or b = 0.

The pairs (m,n) with mu(n) <= m form a monoid under addition (pad with
copies of (1,0)); sending (m,n) to m*a + n*b maps it onto S(a,b).  The
least m with m*a + n*b in S, written mu_{a,b}(n) here, equals mu(n) for
0 <= n < a except at eight known (a,b,n) triples where it is mu(n) - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mu import MuTable, mu, triangular

__all__ = [
    "EXCEPTIONAL_CASES",
    "EXCEPTIONAL_PAIRS",
    "ExceptionalCase",
    "MembershipTable",
    "NotANumericalSemigroup",
    "QuadraticSemigroup",
    "contains",
    "describe",
    "generator",
    "lift_contains",
    "make_semigroup",
    "membership_bound",
    "membership_table",
    "mu_ab_closed",
    "mu_ab_oracle",
    "mu_ab_shift",
    "project",
    "require_nontrivial",
    "shared_membership",
]

# Hard cap on membership table entries, roughly a 256 MB bool array.
_MEMORY_LIMIT = 1 << 28


class NotANumericalSemigroup(ValueError):
    """The generators have a common divisor, so their span is not cofinite."""


@dataclass(frozen=True)
class QuadraticSemigroup:
    """The semigroup generated by y_n = n*a + C(n,2)*b, n >= 0.

    `trivial` marks the collapse to all nonnegative integers (a <= 1 or
    b = 0); the conventions there are Frobenius number -1, genus 0,
    embedding dimension 1.
    """

    a: int
    b: int
    trivial: bool


@dataclass(frozen=True)
class ExceptionalCase:
    """A residue where the least lift sits one step below mu.

    For these pairs (all with b = 1) the least m with m*a + n in S(a,1)
    is mu(n) - 1, certified by (mu(n)-1)*a + n landing exactly on the
    generator with index `witness_index`.
    """

    a: int
    n: int
    mu_n: int
    witness_index: int

    @property
    def b(self) -> int:
        return 1

    @property
    def mu_ab_n(self) -> int:
        return self.mu_n - 1


EXCEPTIONAL_CASES: tuple[ExceptionalCase, ...] = (
    ExceptionalCase(29, 26, 13, 11),
    ExceptionalCase(45, 33, 15, 13),
    ExceptionalCase(47, 44, 16, 14),
    ExceptionalCase(50, 41, 16, 14),
    ExceptionalCase(55, 50, 17, 15),
    ExceptionalCase(67, 53, 18, 16),
    ExceptionalCase(73, 63, 19, 17),
    ExceptionalCase(79, 74, 20, 18),
)

EXCEPTIONAL_PAIRS: frozenset[tuple[int, int]] = frozenset(
    (c.a, c.b) for c in EXCEPTIONAL_CASES
)

_EXCEPTIONAL_DROPS: frozenset[tuple[int, int, int]] = frozenset(
    (c.a, c.b, c.n) for c in EXCEPTIONAL_CASES
)


def make_semigroup(a: int, b: int) -> QuadraticSemigroup:
    """Validate (a,b) and build the semigroup handle."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("(a, b) = (0, 0) generates only 0")
    if math.gcd(a, b) != 1:
        raise NotANumericalSemigroup(
            f"gcd(a,b) must be 1, got gcd({a},{b}) = {math.gcd(a, b)}"
        )
    return QuadraticSemigroup(a=a, b=b, trivial=(a <= 1 or b == 0))


def require_nontrivial(s: QuadraticSemigroup) -> None:
    if s.trivial:
        raise ValueError(f"S({s.a},{s.b}) is trivial; operation needs a >= 2 and b >= 1")


def generator(s: QuadraticSemigroup, n: int) -> int:
    """y_n = n*a + C(n,2)*b."""
    if n < 0:
        raise ValueError("generator index must be nonnegative")
    return n * s.a + triangular(n) * s.b


def describe(s: QuadraticSemigroup, count: int = 8) -> dict:
    """JSON-ready summary: a, b, trivial, first `count` generators."""
    if count < 1:
        raise ValueError("count must be positive")
    return {
        "a": s.a,
        "b": s.b,
        "trivial": s.trivial,
        "generators": [generator(s, n) for n in range(count)],
    }


def membership_bound(s: QuadraticSemigroup) -> int:
    """Default table size: provably past every least-per-residue element.

    mu_{a,b} never exceeds mu, which never exceeds the three-triangular
    ceiling, so every least element of a residue class lies at or below
    the Frobenius ceiling plus a; one more for slack.  Holds for the
    exceptional pairs too, since their least lifts are smaller still.
    """
    a, b = s.a, s.b
    if s.trivial:
        return 2 * (a + b) + 16
    upper = a / 2.0 * (3.0 + math.sqrt(24.0 * a - 15.0)) + a * b - a - b
    return math.ceil(upper) + a + 1


def _close_under_step(reach: np.ndarray, step: int) -> None:
    """Close a reachability mask under adding multiples of `step`, in place.

    Columns of the (padded) mask reshaped to width `step` are the residue
    classes mod step; a prefix logical-or down each column is exactly the
    closure, with no bound on how many copies of `step` are used.
    """
    m = reach.shape[0]
    pad = (-m) % step
    if pad:
        padded = np.concatenate([reach, np.zeros(pad, dtype=bool)])
    else:
        padded = reach
    cols = padded.reshape(-1, step)
    np.logical_or.accumulate(cols, axis=0, out=cols)
    if pad:
        reach[:] = padded[:m]


@dataclass(frozen=True)
class MembershipTable:
    """Exact membership of 0..bound in S; `reachable` is read-only."""

    semigroup: QuadraticSemigroup
    bound: int
    reachable: np.ndarray

    def contains(self, x: int) -> bool:
        if not 0 <= x <= self.bound:
            raise ValueError(f"table covers 0..{self.bound}, asked for {x}")
        return bool(self.reachable[x])


def membership_table(s: QuadraticSemigroup, bound: int | None = None) -> MembershipTable:
    """Brute-force reachability for 0..bound over every generator <= bound.

    Every generator in range participates, with no minimality filtering;
    this is the ground truth the closed forms are measured against.
    """
    if bound is None:
        bound = membership_bound(s)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound + 1 > _MEMORY_LIMIT:
        raise ValueError(f"membership table of size {bound + 1} exceeds the memory budget")
    reach = np.zeros(bound + 1, dtype=bool)
    reach[0] = True
    n = 1
    while True:
        y = generator(s, n)
        if y > bound:
            break
        if y > 0:
            _close_under_step(reach, y)
        n += 1
    reach.flags.writeable = False
    return MembershipTable(semigroup=s, bound=bound, reachable=reach)


_membership_cache: dict[tuple[int, int], MembershipTable] = {}


def shared_membership(s: QuadraticSemigroup, min_bound: int = 0) -> MembershipTable:
    """Cached membership table for s, grown geometrically when extended.

    Tables are immutable; growth replaces the cache entry, so snapshots
    held by other threads stay valid.
    """
    key = (s.a, s.b)
    table = _membership_cache.get(key)
    need = max(min_bound, membership_bound(s))
    if table is not None and table.bound >= need:
        return table
    if table is not None:
        need = max(need, 2 * table.bound)
    table = membership_table(s, need)
    _membership_cache[key] = table
    return table


def contains(s: QuadraticSemigroup, x: int) -> bool:
    """Exact membership of x in S(a,b), for any integer x."""
    if x < 0:
        return False
    if s.trivial:
        return True
    return bool(shared_membership(s, x).reachable[x])


def lift_contains(m: int, n: int, table: MuTable | None = None) -> bool:
    """Whether (m,n) lies in the lifted pair monoid: mu(n) <= m."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return mu(n, table) <= m


def project(m: int, n: int, s: QuadraticSemigroup) -> int:
    """Image of a lifted pair: m*a + n*b."""
    return m * s.a + n * s.b


def mu_ab_oracle(s: QuadraticSemigroup, n: int) -> int:
    """Least m with m*a + n*b in S, read off the membership table.

    Scans the residue class of n*b mod a for its least element; the
    default table bound provably contains one.
    """
    require_nontrivial(s)
    a, b = s.a, s.b
    if not 0 <= n < a:
        raise ValueError("oracle domain is 0 <= n < a; reduce via mu_ab_shift")
    table = shared_membership(s)
    target = (n * b) % a
    hits = np.flatnonzero(table.reachable[target::a])
    least = target + a * int(hits[0])
    quotient, rest = divmod(least - n * b, a)
    if rest:
        raise AssertionError("least residue element inconsistent with its class")
    return quotient


def mu_ab_closed(s: QuadraticSemigroup, n: int, table: MuTable | None = None) -> int:
    """mu_{a,b}(n) on the base window 0 <= n < a without any membership scan.

    Equals mu(n) except at the eight tabulated triples, where the value
    drops by one.
    """
    require_nontrivial(s)
    if not 0 <= n < s.a:
        raise ValueError("closed form domain is 0 <= n < a; reduce via mu_ab_shift")
    value = mu(n, table)
    if (s.a, s.b, n) in _EXCEPTIONAL_DROPS:
        return value - 1
    return value


def mu_ab_shift(s: QuadraticSemigroup, n: int, i: int = 0) -> int:
    """mu_{a,b} at n + i*a for any integers n, i.

    Adding a to the argument subtracts b from the value (multiply a
    witness by the relation between neighbouring generators), so any
    argument reduces to the base window.
    """
    require_nontrivial(s)
    total = n + i * s.a
    base = total % s.a
    steps = (total - base) // s.a
    return mu_ab_closed(s, base) - steps * s.b
