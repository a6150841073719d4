#!/usr/bin/env python3
"""Measure how intersection-number runtime scales with curve size and
puncture count, and fit the effective power-law exponents.

Writes one CSV per sweep and prints the fitted exponents.  The proven worst
case is quadratic in the combined norm m and quartic in n; at desk scale the
observed exponents are far below both.
"""

import argparse
import sys
from pathlib import Path

from dynnikov import exponent_vs_m, exponent_vs_n, fit_exponent, run_scaling, write_csv


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("scaling_out"))
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--quick", action="store_true", help="smaller grids for a fast sanity run"
    )
    parser.add_argument(
        "--ops", action="store_true", help="also count relaxation arithmetic operations"
    )
    args = parser.parse_args(argv)

    if args.quick:
        m_grid = [(10, 100), (10, 400), (10, 1600)]
        n_grid = [(5, 300), (10, 300), (20, 300)]
    else:
        m_grid = [(10, 100), (10, 1000), (10, 10000)]
        n_grid = [(5, 1000), (10, 1000), (20, 1000), (40, 1000)]

    args.out_dir.mkdir(parents=True, exist_ok=True)

    m_records = run_scaling(m_grid, trials=args.trials, seed=args.seed, count_ops=args.ops)
    with open(args.out_dir / "sweep_m.csv", "w", encoding="utf-8", newline="") as fh:
        write_csv(m_records, fh)
    for n, slope in exponent_vs_m(m_records).items():
        print(f"time ~ m^{slope:.3f} at n={n}")

    n_records = run_scaling(n_grid, trials=args.trials, seed=args.seed + 1, count_ops=args.ops)
    with open(args.out_dir / "sweep_n.csv", "w", encoding="utf-8", newline="") as fh:
        write_csv(n_records, fh)
    print(f"time ~ n^{exponent_vs_n(n_records):.3f} at m~{n_grid[0][1]}")

    if args.ops:
        slope = fit_exponent((r.m, r.ops) for r in m_records)
        print(f"relaxation operations ~ m^{slope:.3f} at n=10")

    print(f"CSV written to {args.out_dir}/sweep_m.csv and {args.out_dir}/sweep_n.csv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
