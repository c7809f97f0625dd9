"""Exact counts of binary matrices up to row/column permutation, with bounds.

The count for an n x r board is the Burnside average over S_n x S_r: each
(row permutation, column permutation) pair fixes 2^c matrices, where c is the
number of cycles of the induced permutation of cells.  Everything here works
per cycle type and in exact integer/rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cycleindex import cycle_index_symmetric, evaluate
from .partitions import CycleType, binomial, generate_cycle_types, permutation_count, transposition_type

# Above this column count the inner sum over column cycle types is replaced by
# the degree recurrence for Z(S_r); partition counts grow too fast past it.
_PAIR_SUM_MAX_R = 24

REGIME_LESS = "n<r"
REGIME_EQUAL = "n=r"
REGIME_GREATER = "n>r"


class RegimeError(ValueError):
    """Raised when a bound is requested outside the regime it is proved for."""


@dataclass(frozen=True)
class CountResult:
    n: int
    r: int
    count: int
    ln_count: float


@dataclass(frozen=True)
class BoundsResult:
    n: int
    r: int
    lower: Fraction
    upper: Fraction
    regime: str


def ln_int(x: int) -> float:
    """Natural log of a positive integer of any size."""
    if x <= 0:
        raise ValueError("ln_int needs a positive integer")
    return math.log(x)


def ln_fraction(f: Fraction) -> float:
    if f <= 0:
        raise ValueError("ln_fraction needs a positive value")
    return math.log(f.numerator) - math.log(f.denominator)


@lru_cache(maxsize=None)
def _types_and_sizes(m: int) -> tuple[tuple[CycleType, int], ...]:
    return tuple((t, permutation_count(t)) for t in generate_cycle_types(m))


def _cell_cycle_exponents(t: CycleType, r: int, gcd_fn=math.gcd) -> list[int]:
    """e[j] = cell cycles contributed per j-cycle of columns, for j = 1..r.

    A k-cycle of rows meeting a j-cycle of columns yields gcd(k, j) cell
    cycles, so e[j] = sum_k mult_k * gcd(k, j).
    """
    exps = [0] * (r + 1)
    for k, m in t.mult:
        for j in range(1, r + 1):
            exps[j] += m * gcd_fn(k, j)
    return exps


def _fixed_cell_power_sum(n: int, r: int, gcd_fn=math.gcd) -> int:
    """Sum of class_a * class_b * 2^(cell cycles) over all type pairs."""
    total = 0
    col_types = _types_and_sizes(r)
    for ta, na in _types_and_sizes(n):
        exps = _cell_cycle_exponents(ta, r, gcd_fn)
        row_total = 0
        for tb, nb in col_types:
            e = 0
            for j, m in tb.mult:
                e += m * exps[j]
            row_total += nb << e
        total += na * row_total
    return total


def _fixed_cell_power_sum_by_recurrence(n: int, r: int) -> int:
    """Same sum, but the column side is evaluated by the degree recurrence.

    With x_j = 2^e[j], the scaled values W_m = m! * Z(S_m)(x) satisfy the
    all-integer recurrence W_m = sum_i (m-1)!/(m-i)! * x_i * W_(m-i), W_0 = 1,
    which costs O(r^2) instead of one term per partition of r.
    """
    total = 0
    for ta, na in _types_and_sizes(n):
        exps = _cell_cycle_exponents(ta, r)
        x = [0] + [1 << exps[j] for j in range(1, r + 1)]
        w = [0] * (r + 1)
        w[0] = 1
        for m in range(1, r + 1):
            acc = 0
            coef = 1
            for i in range(1, m + 1):
                acc += coef * x[i] * w[m - i]
                coef *= m - i
            w[m] = acc
        total += na * w[r]
    return total


def count_matrix_classes(n: int, r: int) -> CountResult:
    """Number of n x r binary matrices up to row and column permutation.

    For n != r this is the number of unlabeled bipartite graphs on n+r
    vertices with the sides distinguishable by size.  n == r still counts
    matrix classes (the two sides stay distinct).  An empty board (n or r
    zero) counts one class by convention.
    """
    if n < 0 or r < 0:
        raise ValueError("dimensions must be nonnegative")
    if n == 0 or r == 0:
        return CountResult(n, r, 1, 0.0)
    if r <= _PAIR_SUM_MAX_R:
        s = _fixed_cell_power_sum(n, r)
    else:
        s = _fixed_cell_power_sum_by_recurrence(n, r)
    count, rem = divmod(s, math.factorial(n) * math.factorial(r))
    assert rem == 0, "Burnside average must be an integer"
    return CountResult(n, r, count, ln_int(count))


def uniform_substitution_closed_form(r: int, c: int) -> int:
    """Z(S_r) at x_1 = ... = x_r = c equals C(r + c - 1, r) (multiset count)."""
    if r < 0 or c < 0:
        raise ValueError("arguments must be nonnegative")
    return binomial(r + c - 1, r)


def lower_bound(n: int, r: int) -> Fraction:
    """C(r + 2^n - 1, r) / n!, the identity-permutation term; needs n < r."""
    if n >= r:
        raise RegimeError(f"lower bound proved only for n < r, got n={n} r={r}")
    return Fraction(binomial(r + 2**n - 1, r), math.factorial(n))


def upper_bound(n: int, r: int) -> Fraction:
    if n >= r:
        raise RegimeError(f"upper bound proved only for n < r, got n={n} r={r}")
    return 2 * lower_bound(n, r)


def bounds(n: int, r: int) -> BoundsResult:
    """Two-sided bounds in every regime; transposition symmetry covers n > r.

    For n == r the sandwich needs adjusting: half the n < r style lower bound,
    and the upper bound inherited from the (n, n+1) board.
    """
    if n < 1 or r < 1:
        raise ValueError("bounds need n >= 1 and r >= 1")
    if n < r:
        lo = lower_bound(n, r)
        return BoundsResult(n, r, lo, 2 * lo, REGIME_LESS)
    if n > r:
        lo = lower_bound(r, n)
        return BoundsResult(n, r, lo, 2 * lo, REGIME_GREATER)
    lo = Fraction(binomial(n + 2**n - 1, n), 2 * math.factorial(n))
    hi = Fraction(2 * binomial(n + 1 + 2**n - 1, n + 1), math.factorial(n))
    return BoundsResult(n, r, lo, hi, REGIME_EQUAL)


def general_term_value(n: int, r: int, t: CycleType) -> Fraction:
    """Contribution of one row permutation of cycle type t to the count.

    Equals (1/n!) * Z(S_r) evaluated at x_j = 2^e[j] with e[j] the cell cycle
    exponents of t, so that sum over types of class_size * term = count.
    """
    if t.n != n:
        raise ValueError(f"cycle type has degree {t.n}, expected {n}")
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    exps = _cell_cycle_exponents(t, r)
    assign = {j: 1 << exps[j] for j in range(1, r + 1)}
    return evaluate(cycle_index_symmetric(r), assign) / math.factorial(n)


def second_term_value(n: int, r: int) -> Fraction:
    """Term value of the transposition type, the largest non-identity term."""
    if n < 2:
        raise ValueError("transposition term needs n >= 2")
    return general_term_value(n, r, transposition_type(n))
