"""bipcount command line: exact counts, bounds, per-type terms, tables, verification."""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import oracle, polya
from .partitions import CycleType, generate_cycle_types, partition_count, permutation_count


def decimal_str(f: Fraction) -> str:
    """Float rendering of an exact fraction, scientific form past float range."""
    try:
        return repr(float(f))
    except OverflowError:
        ln10 = math.log(10)
        ln = polya.ln_fraction(f)
        e10 = math.floor(ln / ln10)
        mant = math.exp(ln - e10 * ln10)
        return f"{mant:.6f}e{e10:+d}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _parse_type_spec(spec: str, n: int) -> CycleType:
    """Comma-separated cycle lengths, e.g. '3,1,1' for one 3-cycle plus two fixed points."""
    try:
        parts = [int(p) for p in spec.split(",")]
    except ValueError:
        raise ValueError(f"bad cycle type spec {spec!r}")
    if any(p < 1 for p in parts):
        raise ValueError("cycle lengths must be positive")
    if sum(parts) != n:
        raise ValueError(f"cycle lengths sum to {sum(parts)}, expected {n}")
    return CycleType.from_parts(parts)


# ==================================================================
# subcommands
# ==================================================================


def cmd_count(args) -> int:
    n, r = args.n, args.r
    _warn_if_slow(n, r)
    res = polya.count_matrix_classes(n, r)
    print(f"count {res.count}")
    print(f"ln {res.ln_count!r}")
    if n == r:
        b = polya.bounds(n, r)
        print("note n=r counts matrix classes; the unlabeled-bipartite count can differ")
        print(f"lower {b.lower} ({decimal_str(b.lower)})")
        print(f"upper {b.upper} ({decimal_str(b.upper)})")
    return 0


def cmd_bounds(args) -> int:
    b = polya.bounds(args.n, args.r)
    print(f"regime {b.regime}")
    print(f"lower {b.lower} ({decimal_str(b.lower)})")
    print(f"upper {b.upper} ({decimal_str(b.upper)})")
    return 0


def cmd_term(args) -> int:
    n, r = args.n, args.r
    if args.type is not None:
        try:
            t = _parse_type_spec(args.type, n)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        value = polya.general_term_value(n, r, t)
        print(f"type {args.type} perms {permutation_count(t)} value {value} ({decimal_str(value)})")
        return 0
    total = Fraction(0)
    for t in generate_cycle_types(n):
        size = permutation_count(t)
        value = polya.general_term_value(n, r, t)
        total += size * value
        spec = ",".join(str(p) for p in t.parts())
        print(f"type {spec} perms {size} value {value} ({decimal_str(value)})")
    assert total.denominator == 1
    print(f"count {total.numerator}")
    return 0


def _warn_if_slow(n: int, r: int) -> None:
    # crude cost model; the count is symmetric, so a swapped call may be cheap
    if max(n, r) > 2000:
        print("warning: this size may take very long; count(n,r) = count(r,n)", file=sys.stderr)
        return
    col_work = partition_count(r) if r <= 24 else r * r
    if partition_count(n) * col_work > 50_000_000:
        print(
            f"warning: {n}x{r} may take a long time; count(n,r) = count(r,n), "
            "putting the smaller side first is much faster",
            file=sys.stderr,
        )


# ==================================================================
# table
# ==================================================================


@dataclass(frozen=True)
class TableRow:
    n: int
    r: int
    ln_lower: float
    ln_exact: float
    ln_upper: float
    count: int


def _table_row(pair: tuple[int, int]) -> TableRow:
    n, r = pair
    res = polya.count_matrix_classes(n, r)
    b = polya.bounds(n, r)
    return TableRow(n, r, polya.ln_fraction(b.lower), res.ln_count, polya.ln_fraction(b.upper), res.count)


def table_rows(max_nr: int, workers: int | None = None) -> list[TableRow]:
    """Rows for every 1 <= n < r <= max_nr in (n, r) lexicographic order.

    BIPCOUNT_WORKERS (or the workers argument) > 1 computes rows in a process
    pool; the output order is identical either way.
    """
    if workers is None:
        workers = int(os.environ.get("BIPCOUNT_WORKERS", "1"))
    pairs = [(n, r) for n in range(1, max_nr + 1) for r in range(n + 1, max_nr + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_table_row, pairs))
    else:
        rows = [_table_row(p) for p in pairs]
    rows.sort(key=lambda row: (row.n, row.r))
    return rows


def write_table_csv(rows: list[TableRow], fp) -> None:
    writer = csv.writer(fp)
    writer.writerow(["n", "r", "ln_lower", "ln_exact", "ln_upper"])
    for row in rows:
        writer.writerow([row.n, row.r, repr(row.ln_lower), repr(row.ln_exact), repr(row.ln_upper)])


def write_table_json(rows: list[TableRow], fp) -> None:
    payload = [
        {
            "n": row.n,
            "r": row.r,
            "ln_lower": row.ln_lower,
            "ln_exact": row.ln_exact,
            "ln_upper": row.ln_upper,
            "count": str(row.count),
        }
        for row in rows
    ]
    json.dump(payload, fp, indent=2)
    fp.write("\n")


def cmd_table(args) -> int:
    if args.max < 2:
        print("error: --max must be at least 2", file=sys.stderr)
        return 2
    if args.max > 20:
        print(f"warning: --max {args.max} will be slow", file=sys.stderr)
    rows = table_rows(args.max)
    writer = write_table_csv if args.format == "csv" else write_table_json
    if args.out:
        with open(args.out, "w", newline="") as fp:
            writer(rows, fp)
    else:
        writer(rows, sys.stdout)
    return 0


# ==================================================================
# verify
# ==================================================================


def _gcd_off_by_one(k: int, j: int) -> int:
    g = math.gcd(k, j)
    return g + 1 if k == 2 and j == 2 else g


def _faulty_count(n: int, r: int) -> int:
    # deliberately wrong cell-cycle table, used to prove mismatches surface
    s = polya._fixed_cell_power_sum(n, r, gcd_fn=_gcd_off_by_one)
    return s // (math.factorial(n) * math.factorial(r))


def cmd_verify(args) -> int:
    if args.max_cells > oracle.DEFAULT_MAX_CELLS:
        print(f"error: --max-cells capped at {oracle.DEFAULT_MAX_CELLS}", file=sys.stderr)
        return 2
    if args.burnside_n > oracle.BURNSIDE_N_CAP or args.burnside_r > oracle.BURNSIDE_R_CAP:
        print(
            f"error: explicit Burnside capped at {oracle.BURNSIDE_N_CAP}x{oracle.BURNSIDE_R_CAP}",
            file=sys.stderr,
        )
        return 2

    if args.inject_fault:
        count_fn = _faulty_count
    else:
        count_fn = lambda n, r: polya.count_matrix_classes(n, r).count

    checks = 0
    failures = 0

    def report(kind: str, n: int, r: int, got: int, expected: int) -> None:
        nonlocal checks, failures
        checks += 1
        ok = got == expected
        if not ok:
            failures += 1
        status = "ok" if ok else "MISMATCH"
        print(f"{kind} n={n} r={r} count={got} oracle={expected} {status}")

    for n in range(1, args.max_cells + 1):
        for r in range(1, args.max_cells // n + 1):
            expected = oracle.orbit_count(n, r, max_cells=args.max_cells)
            report("orbit", n, r, count_fn(n, r), expected)
    for n in range(1, args.burnside_n + 1):
        for r in range(1, args.burnside_r + 1):
            expected = oracle.burnside_count_explicit(n, r)
            report("burnside", n, r, count_fn(n, r), expected)

    if failures:
        print(f"FAIL {failures} of {checks} checks mismatched")
        return 1
    print(f"OK {checks} checks")
    return 0


# ==================================================================
# entry point
# ==================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipcount",
        description="Count n x r binary matrices up to row/column permutation "
        "(unlabeled bipartite graphs), with exact two-sided bounds.",
        epilog="BIPCOUNT_WORKERS sets the process count for table generation (default 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact class count for an n x r board")
    p.add_argument("n", type=_positive_int)
    p.add_argument("r", type=_positive_int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", help="exact lower/upper bounds for the count")
    p.add_argument("n", type=_positive_int)
    p.add_argument("r", type=_positive_int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("term", help="per-cycle-type contributions to the count")
    p.add_argument("n", type=_positive_int)
    p.add_argument("r", type=_positive_int)
    p.add_argument("--type", help="cycle lengths of one row type, e.g. 3,1,1")
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("table", help="ln-scale table of bounds and exact counts for n < r")
    p.add_argument("--max", type=int, required=True, help="largest side length")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check counts against brute-force oracles")
    p.add_argument("--max-cells", type=int, default=20, help="orbit sweep covers n*r up to this")
    p.add_argument("--burnside-n", type=int, default=4)
    p.add_argument("--burnside-r", type=int, default=5)
    p.add_argument("--inject-fault", action="store_true", help="self-test: corrupt one cell-cycle table entry")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
