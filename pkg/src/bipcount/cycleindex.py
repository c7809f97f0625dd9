"""Cycle index polynomials of symmetric groups, sparse and exact.

A cycle index is stored as a map from monomials in the variables x_1, x_2, ...
to rational coefficients.  For Z(S_n) every monomial has weight n, where the
weight of x_k^e is k*e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Mapping

from .partitions import generate_cycle_types, permutation_count


@dataclass(frozen=True)
class Monomial:
    """Product of x_k^e factors as (variable index, exponent) pairs, ascending."""

    exps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 0
        for k, e in self.exps:
            assert k > prev and e >= 1, "exponent pairs must be ascending with positive exponents"
            prev = k

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((k, e) for k, e in exps.items() if e)))

    @property
    def weight(self) -> int:
        return sum(k * e for k, e in self.exps)

    def to_text(self) -> str:
        return " ".join(f"x{k}^{e}" for k, e in self.exps)


_ONE = Monomial(())


class CycleIndex:
    """Immutable sparse polynomial; all stored monomials share weight == degree."""

    __hash__ = None

    def __init__(self, degree: int, terms: Mapping[Monomial, Fraction | int]):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            assert mono.weight == degree, "monomial weight must match the degree"
            clean[mono] = coeff
        self._degree = degree
        self._terms = clean

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleIndex):
            return NotImplemented
        return self._degree == other._degree and self._terms == other._terms

    def __repr__(self) -> str:
        return f"CycleIndex(degree={self._degree}, terms={len(self._terms)})"

    def to_text(self) -> str:
        """One term per line, 'num/den x{k}^{e} ...', monomials in sorted order."""
        lines = []
        for mono in sorted(self._terms, key=lambda m: m.exps):
            c = self._terms[mono]
            body = mono.to_text()
            lines.append(f"{c.numerator}/{c.denominator} {body}".rstrip())
        return "\n".join(lines)


@lru_cache(maxsize=None)
def cycle_index_symmetric(n: int) -> CycleIndex:
    """Z(S_n): one term per cycle type, coefficient = class size / n!."""
    fact = math.factorial(n)
    terms = {
        Monomial(t.mult): Fraction(permutation_count(t), fact)
        for t in generate_cycle_types(n)
    }
    return CycleIndex(n, terms)


def cycle_index_by_recurrence(r: int) -> CycleIndex:
    """Z(S_r) built from Z(S_m) = (1/m) * sum_i x_i * Z(S_{m-i}), Z(S_0) = 1."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    levels: list[dict[Monomial, Fraction]] = [{_ONE: Fraction(1)}]
    for m in range(1, r + 1):
        acc: dict[Monomial, Fraction] = {}
        inv_m = Fraction(1, m)
        for i in range(1, m + 1):
            for mono, coeff in levels[m - i].items():
                exps = dict(mono.exps)
                exps[i] = exps.get(i, 0) + 1
                bumped = Monomial.from_dict(exps)
                acc[bumped] = acc.get(bumped, Fraction(0)) + coeff * inv_m
        levels.append(acc)
    return CycleIndex(r, levels[r])


def boxtimes_monomial(a: Monomial, b: Monomial) -> Monomial:
    """Variable-pair product rule for the row/column action on matrix cells.

    A k-cycle on rows and a j-cycle on columns sweep their k*j cells in
    gcd(k,j) cycles of length lcm(k,j), so x_k (x) x_j = x_lcm^gcd and
    exponents multiply through.
    """
    exps: dict[int, int] = {}
    for k, ek in a.exps:
        for j, ej in b.exps:
            var = math.lcm(k, j)
            exps[var] = exps.get(var, 0) + ek * ej * math.gcd(k, j)
    return Monomial.from_dict(exps)


def boxtimes(za: CycleIndex, zb: CycleIndex) -> CycleIndex:
    """Cycle index of the product action on cells; degrees multiply.

    A degree-0 operand acts as a scalar: the other operand scaled by its
    constant coefficient.
    """
    if za.degree == 0 or zb.degree == 0:
        scalar, other = (za, zb) if za.degree == 0 else (zb, za)
        c = scalar.terms.get(_ONE, Fraction(0))
        return CycleIndex(other.degree, {m: c * v for m, v in other.terms.items()})
    acc: dict[Monomial, Fraction] = {}
    for ma, ca in za.terms.items():
        for mb, cb in zb.terms.items():
            m = boxtimes_monomial(ma, mb)
            acc[m] = acc.get(m, Fraction(0)) + ca * cb
    return CycleIndex(za.degree * zb.degree, acc)


def evaluate(
    z: CycleIndex, assign: Mapping[int, Fraction | int] | Callable[[int], Fraction | int]
) -> Fraction:
    """Substitute assign(k) for x_k and return the exact value.

    Raises KeyError if a needed variable has no assignment.
    """
    lookup = assign.__getitem__ if isinstance(assign, Mapping) else assign
    total = Fraction(0)
    for mono, coeff in z.terms.items():
        prod = 1
        for k, e in mono.exps:
            prod *= Fraction(lookup(k)) ** e
        total += coeff * prod
    return total
