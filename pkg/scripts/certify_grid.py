"""Certify both directions of p over a grid and write a JSON summary.

    python3 scripts/certify_grid.py --tmax 3 --lmax 12 --out results/grid.json
"""
import argparse
import json
import time
from pathlib import Path

from pathramsey.cli import certify_grid, certify_tuple


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tmax", type=int, default=3)
    ap.add_argument("--lmax", type=int, default=10)
    ap.add_argument("--symmetric", type=int, default=None)
    ap.add_argument("--fuzz-seeds", type=int, default=50)
    ap.add_argument("--exhaustive-budget", type=int, default=200_000)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    start = time.perf_counter()
    rows = []
    for tg in certify_grid(args.tmax, args.lmax, args.symmetric):
        row = certify_tuple(tg, args.fuzz_seeds, 0, args.exhaustive_budget)
        rows.append(row)
        status = "ok" if row["lower_certified"] and row["upper_certified"] else "FAIL"
        print(f"{str(tuple(tg)):<24} p={row['p']:<4} {row['branch']:<13} {row['upper_evidence']:<10} {status}")
    failing = [r["lengths"] for r in rows if not (r["lower_certified"] and r["upper_certified"])]
    print(f"{len(rows) - len(failing)}/{len(rows)} certified in {time.perf_counter() - start:.1f}s")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps({"results": rows, "failing": failing}, indent=1))
    return 1 if failing else 0


if __name__ == "__main__":
    raise SystemExit(main())
