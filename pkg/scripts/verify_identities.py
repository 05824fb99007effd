#!/usr/bin/env python3
"""Run the transfer-identity suite over a p grid and print per-point residuals.

Examples:
    python scripts/verify_identities.py
    python scripts/verify_identities.py --grid 0.01:0.99:0.01 --tol 1e-9 --csv out.csv
"""

import argparse
import sys

from sig3.cli import emit_csv
from sig3.transfer import grid_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", default="0.05:0.95:0.05")
    ap.add_argument("--tol", type=float, default=1e-10)
    ap.add_argument("--csv", default=None, help="also write the CSV report here")
    args = ap.parse_args()

    start, stop, step = (float(part) for part in args.grid.split(":"))
    report = grid_report(start, stop, step, tol=args.tol)

    print(f"{'p':>6} {'relerr56':>12} {'relerr57':>12} {'relerr58':>12}")
    for row in report.rows:
        flag = "" if (row.pass56 and row.pass57 and row.pass58) else "  <-- FAIL"
        print(f"{row.p:6.3f} {row.relerr56:12.3e} {row.relerr57:12.3e} {row.relerr58:12.3e}{flag}")
    print(f"\nmax residuals: " + "  ".join(f"{k}={v:.3e}" for k, v in report.max_relerr.items()))
    print(f"verdict: {'all pass' if report.all_pass else 'FAILURES'} at tol {report.tol:.1e}")

    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as sink:
            emit_csv(report, sink)
        print(f"csv written to {args.csv}")
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
