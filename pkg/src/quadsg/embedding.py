"""Minimal generating sets and the embedding dimension."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mu import largest_index, triangular
from .semigroup import (
    EXCEPTIONAL_CASES,
    EXCEPTIONAL_PAIRS,
    QuadraticSemigroup,
    _close_under_step,
    generator,
    make_semigroup,
)

__all__ = [
    "MinimalGeneratorSet",
    "embedding_dimension",
    "is_minimal_closed",
    "minimal_generators_closed",
    "minimal_generators_oracle",
    "verify_decomposition",
]

_EXTRA_MINIMAL_INDEX: dict[tuple[int, int], int] = {
    (c.a, c.b): c.witness_index for c in EXCEPTIONAL_CASES
}


@dataclass(frozen=True)
class MinimalGeneratorSet:
    """Indices n whose generator y_n no other generators can produce."""

    semigroup: QuadraticSemigroup
    indices: tuple[int, ...]

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(generator(self.semigroup, n) for n in self.indices)

    def __len__(self) -> int:
        return len(self.indices)


def is_minimal_closed(s: QuadraticSemigroup, n: int) -> bool:
    """Decide whether y_n is a minimal generator, without any search.

    For nontrivial S: y_n is minimal when C(n,2) < a; it is never minimal
    when n > a or a divides C(n,2); in the remaining band it is minimal
    only at the single extra index of an exceptional pair.
    """
    if n < 1:
        raise ValueError("generator index must be >= 1")
    if s.trivial:
        return generator(s, n) == 1
    t = triangular(n)
    if t < s.a:
        return True
    if n > s.a or t % s.a == 0:
        return False
    return _EXTRA_MINIMAL_INDEX.get((s.a, s.b)) == n


def minimal_generators_closed(s: QuadraticSemigroup) -> MinimalGeneratorSet:
    """Minimal indices per the decision procedure, over the window 1..a+5."""
    last = s.a + 5 if not s.trivial else s.a + s.b + 6
    indices = tuple(n for n in range(1, last + 1) if is_minimal_closed(s, n))
    return MinimalGeneratorSet(semigroup=s, indices=indices)


def minimal_generators_oracle(
    s: QuadraticSemigroup, last_index: int | None = None
) -> MinimalGeneratorSet:
    """Recompute minimality by reachability, using no closed forms.

    y_n is minimal exactly when it is not a sum of earlier generators;
    later generators are all larger, so testing each y_n against the span
    of y_1..y_{n-1} before adding it is exact.  Candidates run out to
    a + 5, past the provable cutoff at a.
    """
    if last_index is None:
        last_index = s.a + 5 if not s.trivial else s.a + s.b + 6
    if last_index < 1:
        raise ValueError("last_index must be >= 1")
    gens = [(n, generator(s, n)) for n in range(1, last_index + 1)]
    bound = max((y for _, y in gens), default=0)
    reach = np.zeros(bound + 1, dtype=bool)
    reach[0] = True
    indices = []
    for n, y in gens:
        if y == 0:
            continue
        if not reach[y]:
            indices.append(n)
        _close_under_step(reach, y)
    return MinimalGeneratorSet(semigroup=s, indices=tuple(indices))


def embedding_dimension(a: int, b: int) -> int:
    """Size of the minimal generating set of S(a,b), in integer arithmetic.

    Counts the indices n >= 1 with C(n,2) < a, plus one for the extra
    index of an exceptional pair.  Never evaluates the real inverse of
    the triangular map.
    """
    s = make_semigroup(a, b)
    if s.trivial:
        return 1
    count = largest_index(a - 1)
    if (a, b) in EXCEPTIONAL_PAIRS:
        count += 1
    return count


def verify_decomposition(
    s: QuadraticSemigroup, n: int, coefficients: dict[int, int]
) -> bool:
    """Exact check that y_n equals the stated combination of earlier generators."""
    total = 0
    for idx, c in coefficients.items():
        if not 1 <= idx < n:
            raise ValueError("decomposition indices must satisfy 1 <= i < n")
        if c < 0:
            raise ValueError("multiplicities must be nonnegative")
        total += c * generator(s, idx)
    return total == generator(s, n)
