"""Brute-force cross-checks, deliberately independent of the cycle-type code.

Matrices live as plain integers (MatrixCode): cell (i, j) of an n x r board
is bit i*r + j.  One verifier walks orbits of the swap action directly; the
other averages fixed points over every explicit permutation pair.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import permutations
from typing import Iterator

MatrixCode = int

DEFAULT_MAX_CELLS = 24
BURNSIDE_N_CAP = 6
BURNSIDE_R_CAP = 7


class SizeCapError(ValueError):
    """Instance too large for exhaustive verification."""


def matrix_to_code(rows: list[list[int]]) -> MatrixCode:
    code = 0
    bit = 0
    for row in rows:
        for cell in row:
            assert cell in (0, 1)
            code |= cell << bit
            bit += 1
    return code


def code_to_matrix(code: MatrixCode, n: int, r: int) -> list[list[int]]:
    return [[code >> (i * r + j) & 1 for j in range(r)] for i in range(n)]


def _swap_generators(n: int, r: int) -> tuple[tuple[int, int, int], ...]:
    # (lo, hi, mask) triples; the swapped blocks sit lo and hi bits up from
    # each masked position, so one xor-swap formula covers rows and columns
    gens = []
    row0 = (1 << r) - 1
    for i in range(n - 1):
        gens.append((i * r, (i + 1) * r, row0))
    col0 = 0
    for i in range(n):
        col0 |= 1 << (i * r)
    for j in range(r - 1):
        gens.append((j, j + 1, col0))
    return tuple(gens)


def _apply_swap(code: MatrixCode, gen: tuple[int, int, int]) -> MatrixCode:
    lo, hi, mask = gen
    d = ((code >> lo) ^ (code >> hi)) & mask
    return code ^ ((d << lo) | (d << hi))


def swap_adjacent_rows(code: MatrixCode, i: int, n: int, r: int) -> MatrixCode:
    """Exchange rows i and i+1."""
    row0 = (1 << r) - 1
    return _apply_swap(code, (i * r, (i + 1) * r, row0))


def swap_adjacent_cols(code: MatrixCode, j: int, n: int, r: int) -> MatrixCode:
    """Exchange columns j and j+1."""
    col0 = 0
    for i in range(n):
        col0 |= 1 << (i * r)
    return _apply_swap(code, (j, j + 1, col0))


def iter_orbit_sizes(n: int, r: int, max_cells: int = DEFAULT_MAX_CELLS) -> Iterator[int]:
    """Yield the size of each orbit of the row/column swap action.

    Breadth-first closure under adjacent swaps (they generate the full
    S_n x S_r action), with a visited bit per code: 2^(n*r) bits total.
    """
    cells = n * r
    if cells > max_cells:
        raise SizeCapError(f"{n}x{r} has {cells} cells, cap is {max_cells}")
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    gens = _swap_generators(n, r)
    space = 1 << cells
    visited = bytearray((space + 7) >> 3)
    queue: deque[int] = deque()
    push = queue.append
    pop = queue.popleft
    for seed in range(space):
        if visited[seed >> 3] >> (seed & 7) & 1:
            continue
        visited[seed >> 3] |= 1 << (seed & 7)
        push(seed)
        size = 0
        while queue:
            c = pop()
            size += 1
            for lo, hi, mask in gens:
                d = ((c >> lo) ^ (c >> hi)) & mask
                if d:
                    nc = c ^ ((d << lo) | (d << hi))
                    if not visited[nc >> 3] >> (nc & 7) & 1:
                        visited[nc >> 3] |= 1 << (nc & 7)
                        push(nc)
        yield size


def orbit_count(n: int, r: int, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """Number of matrix classes, counted by exhaustive orbit enumeration."""
    return sum(1 for _ in iter_orbit_sizes(n, r, max_cells))


def burnside_count_explicit(n: int, r: int) -> int:
    """Average fixed-point count over all n! * r! explicit permutation pairs.

    A pair fixes 2^c matrices where c is the number of cycles of the cell map
    (i, j) -> (sigma(i), tau(j)); cycles are traced cell by cell rather than
    computed from the permutations' cycle types.
    """
    if n > BURNSIDE_N_CAP or r > BURNSIDE_R_CAP:
        raise SizeCapError(f"explicit Burnside capped at {BURNSIDE_N_CAP}x{BURNSIDE_R_CAP}")
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    cells = n * r
    total = 0
    for sigma in permutations(range(n)):
        for tau in permutations(range(r)):
            seen = bytearray(cells)
            cycles = 0
            for start in range(cells):
                if seen[start]:
                    continue
                cycles += 1
                c = start
                while not seen[c]:
                    seen[c] = 1
                    c = sigma[c // r] * r + tau[c % r]
            total += 1 << cycles
    count, rem = divmod(total, math.factorial(n) * math.factorial(r))
    if rem:
        raise ArithmeticError("fixed-point sum not divisible by the group order")
    return count
