"""How tight is the two-sided bound in practice?

The guarantee is lower <= count <= 2*lower for every n < r.  This sweeps
r for a few fixed n and prints the measured ratio count/lower, which
drifts from near 2 down toward 1 as the identity term takes over.  The
worst observed ratio per n is reported at the end.

Usage: python scripts/bound_gap.py [--max-n 6] [--max-r 40]
"""

import argparse
from fractions import Fraction

from bipcount import bounds, count_matrix_classes


def sweep(n: int, max_r: int):
    rows = []
    for r in range(n + 1, max_r + 1):
        res = bounds(n, r)
        exact = count_matrix_classes(n, r).count
        rows.append((r, res.lower, exact, Fraction(exact) / res.lower))
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-r", type=int, default=40)
    args = ap.parse_args()

    worst = {}
    for n in range(2, args.max_n + 1):
        print(f"n = {n}")
        print(f"  {'r':>3} {'count/lower':>12} {'ln count':>10}")
        for r, lower, exact, ratio in sweep(n, args.max_r):
            ln = count_matrix_classes(n, r).ln_count
            print(f"  {r:>3} {float(ratio):>12.6f} {ln:>10.3f}")
            if n not in worst or ratio > worst[n][1]:
                worst[n] = (r, ratio)
        print()

    print("worst ratio per n (bound guarantees 2.0):")
    for n, (r, ratio) in sorted(worst.items()):
        print(f"  n={n}: {float(ratio):.6f} at r={r}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
