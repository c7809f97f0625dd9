"""Per-cycle-type contribution spectrum for one board size.

Decomposes count(n, r) into the weighted contribution of each row cycle
type and prints the share of the total carried by each.  The identity
type contributes the lower bound; the transposition type is the largest
of the rest, and everything else falls off quickly.

Usage: python scripts/term_spectrum.py 4 6
"""

import argparse
from fractions import Fraction

from bipcount import (
    count_matrix_classes,
    general_term_value,
    generate_cycle_types,
    permutation_count,
)


def spectrum(n: int, r: int):
    rows = []
    for t in generate_cycle_types(n):
        contrib = permutation_count(t) * general_term_value(n, r, t)
        rows.append((t, permutation_count(t), contrib))
    rows.sort(key=lambda row: row[2], reverse=True)
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("r", type=int)
    args = ap.parse_args()
    n, r = args.n, args.r

    total = Fraction(count_matrix_classes(n, r).count)
    rows = spectrum(n, r)
    # decomposition must reconstruct the count exactly
    assert sum(contrib for _, _, contrib in rows) == total

    print(f"count({n}, {r}) = {total}")
    print(f"{'type':<20} {'perms':>6} {'contribution':>16} {'share':>8}")
    for t, perms, contrib in rows:
        parts = ",".join(str(p) for p in t.parts())
        share = float(contrib / total)
        print(f"{parts:<20} {perms:>6} {float(contrib):>16.4f} {share:>8.2%}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
