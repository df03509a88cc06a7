"""Seeded soundness fuzz for the witness extractor, with branch counts.

    python3 scripts/fuzz_extractor.py --seeds 1000
    python3 scripts/fuzz_extractor.py --targets 5 9 12 --seeds 200
"""
import argparse
import time

from pathramsey.coloring import validate_witness
from pathramsey.extractor import ExtractionStats, extract
from pathramsey.formula import p
from pathramsey.oracle import random_coloring

DEFAULT_CONFIGS = [((8, 10), 13), ((6, 6, 6), 6), ((8, 8, 8), 9), ((16, 16, 16, 16), 17)]


def run(targets, n, seeds):
    stats = ExtractionStats(record_trace=False)
    invalid = 0
    start = time.perf_counter()
    for seed in range(seeds):
        c = random_coloring(n, len(targets), seed)
        w = extract(c, targets, stats)
        invalid += not validate_witness(c, w, targets[w.avoided_color - 1])
    elapsed = time.perf_counter() - start
    print(f"{targets} on K_{n}: {seeds} runs, {invalid} invalid, {elapsed:.1f}s")
    for name, count in sorted(stats.counters.items()):
        print(f"    {name:<24} {count}")
    return invalid + stats.counters["contradiction"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--targets", type=int, nargs="+")
    ap.add_argument("--n", type=int, help="defaults to p(targets)")
    ap.add_argument("--seeds", type=int, default=1000)
    args = ap.parse_args()
    configs = DEFAULT_CONFIGS
    if args.targets:
        configs = [(tuple(args.targets), args.n or p(args.targets))]
    bad = sum(run(tg, n, args.seeds) for tg, n in configs)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
