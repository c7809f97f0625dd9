"""Integer partitions viewed as permutation cycle types, with exact class sizes."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation of degree n.

    mult holds (cycle_length, multiplicity) pairs, ascending by length,
    with zero multiplicities never stored.  Sum of length*multiplicity
    must equal n.
    """

    n: int
    mult: tuple[tuple[int, int], ...]

    def __post_init__(self):
        total = 0
        prev = 0
        for k, m in self.mult:
            assert k > prev and m >= 1, "mult pairs must be ascending with positive counts"
            prev = k
            total += k * m
        assert total == self.n, "cycle lengths must sum to the degree"

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "CycleType":
        parts = list(parts)
        counts = Counter(parts)
        return cls(sum(parts), tuple(sorted(counts.items())))

    def multiplicity(self, k: int) -> int:
        for length, m in self.mult:
            if length == k:
                return m
        return 0

    def parts(self) -> tuple[int, ...]:
        """Expanded part list, largest first."""
        out: list[int] = []
        for k, m in reversed(self.mult):
            out.extend([k] * m)
        return tuple(out)

    @property
    def cycle_count(self) -> int:
        return sum(m for _, m in self.mult)

    @property
    def is_identity(self) -> bool:
        return self.mult == () or self.mult == ((1, self.n),)


def identity_type(n: int) -> CycleType:
    return CycleType(n, ((1, n),)) if n else CycleType(0, ())


def transposition_type(n: int) -> CycleType:
    """Type of a single transposition: n-2 fixed points and one 2-cycle."""
    if n < 2:
        raise ValueError("a transposition needs degree >= 2")
    if n == 2:
        return CycleType(2, ((2, 1),))
    return CycleType(n, ((1, n - 2), (2, 1)))


def _parts_desc(total: int, max_part: int):
    # descending part tuples, emitted in ascending lexicographic order
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, max_part) + 1):
        for rest in _parts_desc(total - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def generate_cycle_types(n: int) -> tuple[CycleType, ...]:
    """All cycle types of degree n in a fixed, documented order.

    Partitions are written with parts descending and listed in ascending
    lexicographic order, so the identity type comes first and the single
    transposition type second (for n >= 2).  n=0 yields one empty type.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return tuple(CycleType.from_parts(p) for p in _parts_desc(n, n))


def permutation_count(t: CycleType) -> int:
    """Number of permutations of S_n with cycle type t."""
    denom = 1
    for k, m in t.mult:
        denom *= k ** m * math.factorial(m)
    q, rem = divmod(math.factorial(t.n), denom)
    assert rem == 0
    return q


def binomial(a: int, b: int) -> int:
    """C(a, b) as an exact integer; 0 when b > a."""
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(a, b)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total
