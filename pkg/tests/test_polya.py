"""Counting, bounds, and per-term values against oracles and known identities."""

import math
from fractions import Fraction

import mpmath
import pytest

from bipcount.cycleindex import cycle_index_symmetric, evaluate
from bipcount.partitions import (
    CycleType,
    binomial,
    generate_cycle_types,
    identity_type,
    permutation_count,
)
from bipcount.polya import (
    RegimeError,
    _fixed_cell_power_sum,
    _fixed_cell_power_sum_by_recurrence,
    bounds,
    count_matrix_classes,
    general_term_value,
    lower_bound,
    second_term_value,
    uniform_substitution_closed_form,
    upper_bound,
)


def test_count_examples():
    # cross-checked by the exhaustive orbit walk in test_oracle
    assert count_matrix_classes(1, 5).count == 6
    assert count_matrix_classes(2, 2).count == 7
    assert count_matrix_classes(2, 3).count == 13
    assert count_matrix_classes(3, 4).count == 87


def test_count_empty_board_convention():
    for n, r in [(0, 0), (0, 5), (5, 0)]:
        res = count_matrix_classes(n, r)
        assert res.count == 1
        assert res.ln_count == 0.0


def test_count_rejects_negative():
    with pytest.raises(ValueError):
        count_matrix_classes(-1, 3)


def test_count_symmetric_in_sides():
    for n in range(1, 11):
        for r in range(n, 11):
            assert count_matrix_classes(n, r).count == count_matrix_classes(r, n).count


def test_inner_sum_paths_agree():
    # the partition pair sum and the degree recurrence must give identical
    # fixed-point totals wherever both apply
    for n in range(1, 7):
        for r in range(1, 13):
            assert _fixed_cell_power_sum(n, r) == _fixed_cell_power_sum_by_recurrence(n, r)


def test_ln_count_matches_high_precision_log():
    mpmath.mp.dps = 60
    for n, r in [(2, 3), (5, 8), (10, 15), (1, 64), (12, 30)]:
        res = count_matrix_classes(n, r)
        true_ln = float(mpmath.log(res.count))
        assert abs(res.ln_count - true_ln) <= 1e-9 * max(1.0, abs(true_ln))


def test_closed_form_examples():
    assert uniform_substitution_closed_form(4, 2) == 5
    for r in range(21):
        for c in range(1, 6):
            assert uniform_substitution_closed_form(r, c) == math.comb(r + c - 1, r)


def test_uniform_substitution_matches_closed_form():
    for n in range(1, 7):
        c = 2**n
        for r in range(16):
            z = cycle_index_symmetric(r)
            assert evaluate(z, lambda k: c) == uniform_substitution_closed_form(r, c)


def test_bound_examples():
    assert lower_bound(2, 4) == Fraction(35, 2)
    assert upper_bound(2, 4) == 35
    assert lower_bound(3, 4) == 55
    assert upper_bound(3, 4) == 110
    assert lower_bound(2, 3) == 10


def test_bounds_regime_errors():
    for n, r in [(3, 3), (4, 2), (5, 5)]:
        with pytest.raises(RegimeError):
            lower_bound(n, r)
        with pytest.raises(RegimeError):
            upper_bound(n, r)


def test_bounds_all_regimes():
    b = bounds(2, 3)
    assert (b.lower, b.upper, b.regime) == (10, 20, "n<r")
    assert b.lower <= count_matrix_classes(2, 3).count <= b.upper

    b = bounds(3, 2)  # mirror of (2, 3)
    assert (b.lower, b.upper, b.regime) == (10, 20, "n>r")

    b = bounds(2, 2)
    assert (b.lower, b.upper, b.regime) == (Fraction(5, 2), 20, "n=r")

    b = bounds(1, 1)
    assert (b.lower, b.upper, b.regime) == (1, 6, "n=r")

    with pytest.raises(ValueError):
        bounds(0, 3)


def test_upper_is_twice_lower_off_diagonal():
    for n in range(1, 11):
        for r in range(1, 11):
            if n == r:
                continue
            b = bounds(n, r)
            assert b.upper == 2 * b.lower
            assert b.lower > 0


def test_sandwich_small_sweep():
    for n in range(1, 10):
        for r in range(n + 1, 11):
            b = bounds(n, r)
            count = count_matrix_classes(n, r).count
            assert b.lower <= count <= b.upper


def test_identity_term_is_the_lower_bound():
    for n in range(1, 8):
        for r in range(n + 1, 9):
            term = general_term_value(n, r, identity_type(n))
            assert term == lower_bound(n, r)


def test_general_term_examples():
    assert general_term_value(3, 4, CycleType.from_parts([3])) == Fraction(3, 2)
    # full decomposition of the 3x4 count: 55 + 3*(29/3) + 2*(3/2) = 87
    values = [
        (1, Fraction(55)),
        (3, Fraction(29, 3)),
        (2, Fraction(3, 2)),
    ]
    total = sum(size * v for size, v in values)
    assert total == 87


def test_general_term_degree_mismatch():
    with pytest.raises(ValueError):
        general_term_value(4, 6, CycleType.from_parts([3]))


def test_term_decomposition_reproduces_count():
    for n in range(1, 9):
        for r in range(1, 11):
            total = sum(
                permutation_count(t) * general_term_value(n, r, t)
                for t in generate_cycle_types(n)
            )
            assert total == count_matrix_classes(n, r).count


def test_second_term_examples():
    assert second_term_value(2, 4) == Fraction(9, 2)
    assert second_term_value(3, 4) == Fraction(29, 3)
    assert second_term_value(2, 3) == 3
    with pytest.raises(ValueError):
        second_term_value(1, 5)


def _second_term_cap(n: int, r: int) -> Fraction:
    return Fraction(
        binomial(r + 2**n - 1, r),
        math.factorial(n) * (math.factorial(n) - 1),
    )


def test_second_term_upper_estimate():
    # transposition term stays below C(r + 2^n - 1, r) / (n! (n! - 1));
    # only true for n <= 3, see test_second_term_cap_fails_for_wider_boards
    for n in (2, 3):
        for r in range(n + 1, 13):
            assert second_term_value(n, r) <= _second_term_cap(n, r)


def test_second_term_cap_fails_for_wider_boards():
    # the per-term cap above is NOT valid once n >= 4: at (4, 5) the
    # transposition term is 169/3 vs a cap of 646/23.  The violation
    # shrinks as r grows (n=4 recovers at r=8, n=5 at r=11, ...) and the
    # two-sided count bound itself is unaffected, so this pins the known
    # exceptions rather than the estimate.
    assert second_term_value(4, 5) == Fraction(169, 3)
    assert _second_term_cap(4, 5) == Fraction(646, 23)
    for n, r in [(4, 5), (4, 6), (4, 7), (5, 6), (6, 7)]:
        assert second_term_value(n, r) > _second_term_cap(n, r)
        res = bounds(n, r)
        exact = count_matrix_classes(n, r).count
        assert res.lower <= exact <= res.upper
    # cap is restored for n = 4 once the board is wide enough
    for r in range(8, 13):
        assert second_term_value(4, r) <= _second_term_cap(4, r)


def test_transposition_dominates_small_sweep():
    for n in range(2, 8):
        for r in range(n + 1, 9):
            second = second_term_value(n, r)
            for t in generate_cycle_types(n)[1:]:
                assert general_term_value(n, r, t) <= second


def test_nonidentity_types_lose_a_cycle():
    # any non-identity permutation has at most n - 1 cycles
    for n in range(1, 21):
        for t in generate_cycle_types(n)[1:]:
            assert t.cycle_count <= n - 1


def test_gcd_cell_cycles_step_down():
    # a non-identity row type that attains n cell cycles against some column
    # length cannot also attain n against the previous length
    for n in range(2, 13):
        for t in generate_cycle_types(n)[1:]:
            for alpha in range(2, 25):
                hits_next = sum(m * math.gcd(k, alpha + 1) for k, m in t.mult) == n
                if hits_next:
                    assert sum(m * math.gcd(k, alpha) for k, m in t.mult) <= n - 1


def test_alternating_substitution_monotone_in_degree():
    # the transposition substitution (2^(n-1) at odd indices, 2^n at even)
    # evaluates to a nondecreasing sequence as columns are added
    for n in range(2, 11):
        prev = Fraction(1)  # empty board
        for r in range(1, 16):
            z = cycle_index_symmetric(r)
            value = evaluate(z, lambda k: 2 ** (n if k % 2 == 0 else n - 1))
            assert value >= prev
            prev = value
