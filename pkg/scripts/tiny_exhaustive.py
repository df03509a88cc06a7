"""Exhaustive search at K_p and K_{p-1} for tuples small enough to enumerate."""
import argparse
import itertools

from pathramsey.coloring import num_edges
from pathramsey.formula import p
from pathramsey.oracle import exhaustive_verify_upper


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=10**8)
    ap.add_argument("--lmax", type=int, default=6)
    args = ap.parse_args()
    tuples = [tg for t in (2, 3) for tg in itertools.combinations_with_replacement(range(2, args.lmax + 1), t)]
    wrong = 0
    for tg in tuples:
        value = p(tg)
        if len(tg) ** num_edges(value) > args.budget:
            continue
        upper = exhaustive_verify_upper(value, tg, budget=args.budget, prune_color_symmetry=True)
        lower = exhaustive_verify_upper(value - 1, tg, budget=args.budget) if value > 1 else None
        ok = upper.verdict.name == "ALL_CONTAIN_WITNESS" and (lower is None or lower.counterexample is not None)
        wrong += not ok
        print(f"{str(tg):<16} p={value:<3} K_{value}: {upper.verdict.value:<27} "
              f"examined {upper.colorings_examined:<9} {upper.elapsed:6.2f}s  {'ok' if ok else 'WRONG'}")
    return 1 if wrong else 0


if __name__ == "__main__":
    raise SystemExit(main())
