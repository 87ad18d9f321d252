"""Tabulate multiplicity, EN-turn numerator and pole order for every pair
tau <= w up to a given n, as CSV on stdout."""

import argparse
import csv
import sys

from grassmult import hilbert_series, lgv_multiplicity
from grassmult.verify import all_instances


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--singular-only", action="store_true", help="skip multiplicity-1 points")
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["n", "d", "w", "tau", "multiplicity", "numerator", "pole_order"])
    for inst in all_instances(args.max_n, args.min_n):
        mult = lgv_multiplicity(inst)
        if args.singular_only and mult == 1:
            continue
        hs = hilbert_series(inst)
        out.writerow([
            inst.n, inst.d, " ".join(map(str, inst.w.entries)), " ".join(map(str, inst.tau.entries)),
            mult, " ".join(map(str, hs.numerator.coefficients)), hs.pole_order,
        ])


if __name__ == "__main__":
    main()
